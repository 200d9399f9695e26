#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "lambda.hpp"
#include "primes.hpp"
#include "word.hpp"

namespace amalg {

/// The subgroups membership can be decided for.
struct Subgroup
{
  enum class Kind { k, k_from, lambda, g_level };

  Kind kind = Kind::k;
  unsigned n = 0;

  static Subgroup k() { return {Kind::k, 0}; }
  static Subgroup k_from(unsigned n) { return {Kind::k_from, n}; }
  static Subgroup lambda() { return {Kind::lambda, 0}; }
  static Subgroup g_level(unsigned n) { return {Kind::g_level, n}; }
};

/// Membership on a reduced word. Reduced words of level >= 1 are never in G_0.
inline bool in_subgroup(const Word& w, Subgroup sub)
{
  switch (sub.kind) {
  case Subgroup::Kind::g_level: return w.level() <= sub.n;
  case Subgroup::Kind::k: return w.level() == 0 && w.base().lambda.is_identity();
  case Subgroup::Kind::k_from:
    return w.level() == 0 && w.base().lambda.is_identity() && w.base().k.supported_from(sub.n);
  case Subgroup::Kind::lambda: return w.level() == 0 && w.base().k.is_zero();
  }
  return false;
}

/// The tower G_0 < G_1 < ... over a fixed prime sequence.
///
/// Holds no state besides the primes; every operation is a pure function of
/// its arguments, and all results are reduced words.
class Tower
{
public:
  Tower() = default;
  explicit Tower(PrimeSeq primes) : primes_(std::move(primes)) {}

  const PrimeSeq& primes() const noexcept { return primes_; }

  // -- element constructors ------------------------------------------------

  Word identity() const { return {}; }

  Word h(std::size_t n, std::int64_t a, std::int64_t b, std::int64_t c) const
  {
    return Word(G0Element{KVector(make_hn(primes_, n, a, b, c)), {}});
  }

  Word k(KVector v) const { return Word(G0Element{std::move(v), {}}); }

  Word lambda(LambdaMatrix m) const { return Word(G0Element{{}, std::move(m)}); }

  Word g0(G0Element x) const { return Word(std::move(x)); }

  /// g_level^exponent.
  Word stable(unsigned level, const Int& exponent = 1) const
  {
    if (level == 0)
      throw Error(Errc::precondition, "stable letters start at level 1");
    if (exponent == 0)
      return {};
    return Word(level, {Word{}, Word{}}, {exponent});
  }

  // -- group law -----------------------------------------------------------

  Word mul(const Word& a, const Word& b) const
  {
    if (a.is_identity())
      return b;
    if (b.is_identity())
      return a;
    unsigned top = std::max(a.level(), b.level());
    if (top == 0)
      return Word(mul0(a.base(), b.base()));

    Chain chain = open_chain(a, top);
    if (b.level() == top) {
      append(chain, Int(0), b.pieces_[0], top);
      for (std::size_t i = 0; i < b.exponents_.size(); ++i)
        append(chain, b.exponents_[i], b.pieces_[i + 1], top);
    } else {
      append(chain, Int(0), b, top);
    }
    return close_chain(std::move(chain), top);
  }

  Word inv(const Word& a) const
  {
    if (a.level() == 0) {
      const auto& x = a.base();
      auto li = x.lambda.inverse();
      auto k = KVector::negate(primes_, act(primes_, li, x.k));
      return Word(G0Element{std::move(k), std::move(li)});
    }
    unsigned top = a.level();
    std::size_t r = a.exponents_.size();
    Chain chain{{inv(a.pieces_[r])}, {}};
    for (std::size_t i = r; i-- > 0;)
      append(chain, -a.exponents_[i], inv(a.pieces_[i]), top);
    return close_chain(std::move(chain), top);
  }

  Word pow(const Word& a, const Int& exponent) const
  {
    if (exponent < 0)
      return pow(inv(a), -exponent);
    // g_L^m is already reduced; skip the squaring loop for it.
    if (a.level() > 0 && a.exponents_.size() == 1 && a.pieces_[0].is_identity() &&
        a.pieces_[1].is_identity())
      return stable(a.level(), a.exponents_[0] * exponent);
    Word result, base = a;
    Int e = exponent;
    while (e > 0) {
      if ((e & 1) != 0)
        result = mul(result, base);
      e >>= 1;
      if (e > 0)
        base = mul(base, base);
    }
    return result;
  }

  /// Reduces an arbitrary syllable sequence.
  Word reduce(const RawWord& raw) const
  {
    Word out;
    for (const auto& s : raw)
      out = mul(out, from_syllable(s));
    return out;
  }

  Word from_syllable(const Syllable& s) const
  {
    if (const auto* g = std::get_if<G0Element>(&s))
      return Word(*g);
    const auto& st = std::get<StableSyllable>(s);
    return stable(st.level, st.exponent);
  }

  /// The syllable sequence spelled by a reduced word; reduce(flatten(w)) == w.
  RawWord flatten(const Word& w) const
  {
    RawWord out;
    flatten_into(w, out);
    return out;
  }

  /// Decides equality by reducing a * b^{-1} to the identity.
  bool eq(const Word& a, const Word& b) const { return mul(a, inv(b)).is_identity(); }

  bool member(const Word& a, Subgroup sub) const { return in_subgroup(a, sub); }

  /// h g h^{-1}.
  Word conj(const Word& g, const Word& h) const { return mul(mul(h, g), inv(h)); }

  /// g k g^{-1} for k in K; same value as conj(k, g).
  ///
  /// Walks g from the inside out, conjugating within K while every partial
  /// conjugate commutes with the stable letter it meets (i.e. lies in
  /// K_{level-1}); otherwise falls back to the general product.
  Word conj_k(const KVector& k, const Word& g) const
  {
    if (auto image = conj_within_k(k, g))
      return this->k(std::move(*image));
    return conj(this->k(k), g);
  }

  /// Splits w = c * k with k in K_n and c the canonical representative of the
  /// left coset w K_n (c is the identity iff w is in K_n).
  std::pair<Word, Word> split_coset(const Word& w, unsigned n) const
  {
    Word c = w;
    Word k = strip_coset(c, n);
    return {std::move(c), std::move(k)};
  }

  /// In-place form of split_coset: turns w into its coset representative and
  /// returns the K_n part.
  Word strip_coset(Word& w, unsigned n) const
  {
    if (w.level() > 0)
      return strip_coset(w.pieces_.back(), n);
    auto& x = w.base_;
    auto high = x.k.restrict_from(n);
    if (high.is_zero())
      return {};
    // (k, l) = (k_low, l) (l^{-1} k_high, I)
    x.k = x.k.restrict_below(n);
    return Word(G0Element{act(primes_, x.lambda.inverse(), high), {}});
  }

  // -- balls and conjugate counts ------------------------------------------

  /// Distinct elements expressible as products of at most `radius` letters.
  std::vector<Word> ball(const std::vector<Word>& alphabet, unsigned radius) const
  {
    std::set<Word> seen{Word{}};
    std::vector<Word> frontier{Word{}};
    for (unsigned r = 0; r < radius; ++r) {
      std::vector<Word> next;
      for (const auto& w : frontier)
        for (const auto& a : alphabet) {
          auto prod = mul(w, a);
          if (seen.insert(prod).second)
            next.push_back(std::move(prod));
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  /// Symmetric generating letters for G_level: the twelve elementary
  /// matrices, g_M^{+-1} for 1 <= M <= level, and h(j; +-1,0,0) for j <= level.
  std::vector<Word> alphabet(unsigned level) const
  {
    std::vector<Word> out;
    for (const auto& g : elementary_generators())
      out.push_back(lambda(g));
    for (unsigned m = 1; m <= level; ++m) {
      out.push_back(stable(m, 1));
      out.push_back(stable(m, -1));
    }
    for (unsigned j = 0; j <= level; ++j) {
      out.push_back(h(j, 1, 0, 0));
      out.push_back(h(j, -1, 0, 0));
    }
    return out;
  }

  /// Number of distinct h g h^{-1} for h in lambda_ball(radius).
  std::size_t lambda_conjugate_count(const Word& g, unsigned radius) const
  {
    std::set<Word> conjugates;
    for (const auto& h : lambda_ball(radius))
      conjugates.insert(conj(g, lambda(h)));
    return conjugates.size();
  }

  /// Counts distinct conjugates of g != e over a growing ball.
  ///
  /// For g outside K the conjugators range over lambda_ball(radius). K is
  /// normal in G_1 and every element of K has a finite G_1-class, so for
  /// g in K the conjugators are words of length <= radius in the elementary
  /// matrices and g_{N+1}^{+-1}, where N = 1 + (least index in g's support)
  /// guarantees g is not in K_N.
  std::size_t conjugate_growth(const Word& g, unsigned radius) const
  {
    if (g.is_identity())
      throw Error(Errc::precondition, "conjugate_growth needs a nontrivial element");
    if (!member(g, Subgroup::k()))
      return lambda_conjugate_count(g, radius);
    unsigned level = static_cast<unsigned>(*g.base().k.min_index()) + 2;
    std::vector<Word> letters;
    for (const auto& m : elementary_generators())
      letters.push_back(lambda(m));
    letters.push_back(stable(level, 1));
    letters.push_back(stable(level, -1));
    std::set<Word> conjugates;
    for (const auto& h : ball(letters, radius))
      conjugates.insert(conj(g, h));
    return conjugates.size();
  }

private:
  struct Chain
  {
    std::vector<Word> pieces;
    std::vector<Int> exponents;
  };

  G0Element mul0(const G0Element& a, const G0Element& b) const
  {
    return {KVector::add(primes_, a.k, act(primes_, a.lambda, b.k)), a.lambda * b.lambda};
  }

  static Chain open_chain(const Word& a, unsigned top)
  {
    if (a.level() == top)
      return {a.pieces_, a.exponents_};
    return {{a}, {}};
  }

  static Word close_chain(Chain chain, unsigned top)
  {
    if (chain.exponents.empty())
      return std::move(chain.pieces.front());
    return Word(top, std::move(chain.pieces), std::move(chain.exponents));
  }

  // Appends t^m x (t = g_top, x of level < top) to a reduced chain. Only the
  // last piece is unconstrained, so only it needs inspecting: its K_{top-1}
  // part commutes past t^m, and if nothing else is left the t-powers merge.
  void append(Chain& chain, const Int& m, const Word& x, unsigned top) const
  {
    Word& last = chain.pieces.back();
    if (m == 0) {
      last = mul(last, x);
      return;
    }
    Word k = strip_coset(last, top - 1);
    if (last.is_identity() && !chain.exponents.empty()) {
      chain.exponents.back() += m;
      Word merged = mul(k, x);
      if (chain.exponents.back() == 0) {
        chain.exponents.pop_back();
        chain.pieces.pop_back();
        chain.pieces.back() = mul(chain.pieces.back(), merged);
      } else {
        last = std::move(merged);
      }
      return;
    }
    chain.exponents.push_back(m);
    chain.pieces.push_back(mul(k, x));
  }

  std::optional<KVector> conj_within_k(const KVector& k, const Word& g) const
  {
    if (g.level() == 0)
      return act(primes_, g.base().lambda, k); // (a, l)(k, I)(a, l)^{-1} = (l.k, I)
    std::optional<KVector> cur = k;
    for (std::size_t i = g.pieces_.size(); i-- > 0;) {
      cur = conj_within_k(*cur, g.pieces_[i]);
      if (!cur)
        return std::nullopt;
      if (i > 0 && !cur->supported_from(g.level() - 1))
        return std::nullopt;
    }
    return cur;
  }

  void flatten_into(const Word& w, RawWord& out) const
  {
    if (w.level() == 0) {
      if (!w.is_identity())
        out.emplace_back(w.base());
      return;
    }
    for (std::size_t i = 0; i < w.pieces_.size(); ++i) {
      flatten_into(w.pieces_[i], out);
      if (i < w.exponents_.size())
        out.emplace_back(StableSyllable{w.level(), w.exponents_[i]});
    }
  }

  PrimeSeq primes_;
};

/// Conjugation k -> g k g^{-1} on K by a fixed g, prepared once so that it
/// can be applied to many k cheaply.
///
/// g is flattened, from the inside out, into matrix actions (consecutive ones
/// multiplied together) and "stays in K_m" checks, one before each stable
/// letter g_{m+1}^{+-j}, which commutes with K_m. Matrices are reduced mod
/// p_n on first use. Gives the same value as Tower::conj_k whenever that
/// value is in K, and nullopt otherwise.
class KConjugator
{
public:
  KConjugator(const Tower& tower, const Word& g) : primes_(tower.primes()) { compile(g); }

  std::optional<KVector> operator()(const KVector& k) const
  {
    KVector cur = k;
    for (const auto& step : steps_) {
      if (step.is_check) {
        if (!cur.supported_from(step.check_from))
          return std::nullopt;
        continue;
      }
      cur = transform_components(cur, [&](const HnVector& h) {
        const auto& m = reduced(step, h.index);
        auto p = primes_.at(h.index);
        Triple out{};
        for (int r = 0; r < 3; ++r)
          out[r] = (m[r * 3] * h.coords[0] + m[r * 3 + 1] * h.coords[1] + m[r * 3 + 2] * h.coords[2]) % p;
        return out;
      });
    }
    return cur;
  }

  /// Same as operator() for a single component, without allocation.
  std::optional<HnVector> operator()(HnVector h) const
  {
    if (h.is_zero())
      return h;
    auto p = primes_.at(h.index);
    for (const auto& step : steps_) {
      if (step.is_check) {
        if (h.index < step.check_from)
          return std::nullopt;
        continue;
      }
      const auto& m = reduced(step, h.index);
      Triple out{};
      for (int r = 0; r < 3; ++r)
        out[r] = (m[r * 3] * h.coords[0] + m[r * 3 + 1] * h.coords[1] + m[r * 3 + 2] * h.coords[2]) % p;
      h.coords = out;
    }
    return h;
  }

private:
  struct Step
  {
    bool is_check = false;
    unsigned check_from = 0;
    LambdaMatrix lambda;
    mutable std::vector<std::pair<std::size_t, std::array<Residue, 9>>> mod_cache;
  };

  const std::array<Residue, 9>& reduced(const Step& step, std::size_t index) const
  {
    for (const auto& [i, m] : step.mod_cache)
      if (i == index)
        return m;
    auto p = primes_.at(index);
    std::array<Residue, 9> m;
    for (int i = 0; i < 9; ++i)
      m[i] = residue(step.lambda.entries()[i], p);
    step.mod_cache.emplace_back(index, m);
    return step.mod_cache.back().second;
  }

  void push_act(const LambdaMatrix& m)
  {
    if (m.is_identity())
      return;
    if (!steps_.empty() && !steps_.back().is_check) {
      steps_.back().lambda = m * steps_.back().lambda;
      return;
    }
    Step s;
    s.lambda = m;
    steps_.push_back(std::move(s));
  }

  void compile(const Word& g)
  {
    if (g.level() == 0) {
      push_act(g.base().lambda);
      return;
    }
    auto pieces = g.pieces();
    for (std::size_t i = pieces.size(); i-- > 0;) {
      compile(pieces[i]);
      if (i > 0) {
        Step s;
        s.is_check = true;
        s.check_from = g.level() - 1;
        steps_.push_back(std::move(s));
      }
    }
  }

  PrimeSeq primes_;
  std::vector<Step> steps_;
};

} // namespace amalg
