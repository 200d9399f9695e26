#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coefficients.hpp"
#include "error.hpp"
#include "group_algebra.hpp"
#include "tower.hpp"

namespace amalg {

/// A finitely supported vector in l^2(G), sum_g c_g delta_g.
template <class Coeff>
class L2Vector : public detail::SparseCoeffs<Coeff>
{
public:
  L2Vector() = default;

  static L2Vector delta(const Word& g, const Coeff& c = Coeff{1})
  {
    L2Vector v;
    v.add_term(g, c);
    return v;
  }

  /// x delta_e for x in the group algebra.
  static L2Vector from_algebra(const GroupAlgebraElement<Coeff>& x)
  {
    L2Vector v;
    for (const auto& [g, c] : x.terms())
      v.add_term(g, c);
    return v;
  }

  friend Coeff inner(const L2Vector& a, const L2Vector& b)
  {
    Coeff s{};
    for (const auto& [g, c] : a.terms_)
      if (auto it = b.terms_.find(g); it != b.terms_.end())
        s += conjugate(c) * it->second;
    return s;
  }

  friend L2Vector operator+(L2Vector a, const L2Vector& b)
  {
    for (const auto& [g, c] : b.terms_)
      a.add_term(g, c);
    return a;
  }

  friend L2Vector operator-(L2Vector a, const L2Vector& b)
  {
    for (const auto& [g, c] : b.terms_)
      a.add_term(g, -c);
    return a;
  }

  friend bool operator==(const L2Vector& a, const L2Vector& b) { return a.terms_ == b.terms_; }
};

/// The adjoint representation pi(g): delta_k -> delta_{g k g^{-1}}.
template <class Coeff>
L2Vector<Coeff> adjoint_apply(const Tower& tower, const Word& g, const L2Vector<Coeff>& v)
{
  if (g.is_identity())
    return v;
  Word g_inv = tower.inv(g);
  L2Vector<Coeff> out;
  for (const auto& [k, c] : v.terms()) {
    if (in_subgroup(k, Subgroup::k()))
      out.add_term(tower.conj_k(k.base().k, g), c);
    else
      out.add_term(tower.mul(tower.mul(g, k), g_inv), c);
  }
  return out;
}

/// Decides pi(g) v == v for many g against one fixed v, without building
/// pi(g) v: pi(g) permutes basis vectors, so v is fixed iff
/// v(g k g^{-1}) = v(k) for every k in the support of v.
template <class Coeff>
class AdjointFixedTest
{
public:
  AdjointFixedTest(const Tower& tower, const L2Vector<Coeff>& v) : tower_(tower), v_(v)
  {
    // Coefficients are compared through ids of their distinct values.
    std::vector<Coeff> values;
    std::map<Coeff, std::size_t, CoeffLess> ids;
    auto id_of = [&](const Coeff& c) {
      auto [it, fresh] = ids.try_emplace(c, values.size() + 1);
      if (fresh)
        values.push_back(c);
      return it->second;
    };
    for (const auto& [k, c] : v.terms()) {
      if (!in_subgroup(k, Subgroup::k())) {
        others_.push_back({&k, &c});
        continue;
      }
      const auto& support = k.base().k.support();
      auto id = id_of(c);
      if (support.size() == 1 && table(support.front().index)) {
        singles_.push_back({support.front(), id});
        table_[support.front().index][code(support.front())] = id;
      } else {
        k_terms_.emplace(k.base().k, id);
      }
    }
    values_ = std::move(values);
  }

  bool operator()(const Word& g) const
  {
    if (g.is_identity())
      return true;
    KConjugator on_k(tower_, g);
    std::optional<Word> g_inv;
    auto fallback = [&](const Word& k, const Coeff& c) {
      if (!g_inv)
        g_inv = tower_.inv(g);
      return v_.coeff(tower_.mul(tower_.mul(g, k), *g_inv)) == c;
    };
    for (const auto& [h, id] : singles_) {
      auto image = on_k(h);
      if (!image) {
        if (!fallback(tower_.k(KVector(h)), values_[id - 1]))
          return false;
        continue;
      }
      if (table_[image->index][code(*image)] != id)
        return false;
    }
    for (const auto& [k, id] : k_terms_) {
      auto image = on_k(k);
      if (!image) {
        if (!fallback(tower_.k(k), values_[id - 1]))
          return false;
        continue;
      }
      auto it = k_terms_.find(*image);
      if (it == k_terms_.end() || it->second != id)
        return false;
    }
    for (const auto& [k, c] : others_)
      if (!fallback(*k, *c))
        return false;
    return true;
  }

private:
  struct CoeffLess
  {
    bool operator()(const Rational& a, const Rational& b) const { return a < b; }
    bool operator()(const Complex& a, const Complex& b) const
    {
      return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag());
    }
  };

  static constexpr std::size_t kMaxTable = std::size_t{1} << 20;

  // Dense lookup by point code for single-component keys in H_n; 0 = absent.
  bool table(std::size_t index)
  {
    auto p = tower_.primes().at(index);
    if (p * p * p > kMaxTable)
      return false;
    if (table_.size() <= index)
      table_.resize(index + 1);
    if (table_[index].empty())
      table_[index].assign(p * p * p, 0);
    return true;
  }

  std::size_t code(const HnVector& h) const
  {
    auto p = tower_.primes().at(h.index);
    return (h.coords[0] * p + h.coords[1]) * p + h.coords[2];
  }

  const Tower& tower_;
  const L2Vector<Coeff>& v_;
  std::vector<Coeff> values_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::pair<HnVector, std::size_t>> singles_;
  std::map<KVector, std::size_t> k_terms_;
  std::vector<std::pair<const Word*, const Coeff*>> others_;
};

template <class Coeff>
bool adjoint_fixes(const Tower& tower, const Word& g, const L2Vector<Coeff>& v)
{
  return AdjointFixedTest<Coeff>(tower, v)(g);
}

/// sqrt(scale_squared) * body, for vectors whose normalisation is irrational.
struct ScaledVector
{
  Rational scale_squared;
  L2Vector<Rational> body;

  Rational norm_squared() const { return scale_squared * body.norm_squared(); }

  /// <delta_g, v>^2, exact.
  Rational inner_delta_squared(const Word& g) const
  {
    auto c = body.coeff(g);
    return scale_squared * c * c;
  }
};

/// xi_n = p_n^{3/2} alpha(e_n) delta_e = p_n^{-3/2} sum_{h in H_n} delta_h.
inline ScaledVector xi(const Tower& tower, std::size_t n)
{
  auto p = tower.primes().at(n);
  ScaledVector v{inverse_cube(p), {}};
  for (Residue a = 0; a < p; ++a)
    for (Residue b = 0; b < p; ++b)
      for (Residue c = 0; c < p; ++c)
        v.body.add_term(tower.k(KVector(HnVector{n, {a, b, c}})), Rational(1));
  return v;
}

/// Exact check of pi(g) xi_n = xi_n for g in G_level, asserted for n > level.
/// Throws Errc::not_asserted for n <= level and Errc::precondition if g is
/// not in G_level.
inline bool check_xi_invariance(const Tower& tower, unsigned level, std::size_t n, const Word& g)
{
  if (n <= level)
    throw Error(Errc::not_asserted, "xi_" + std::to_string(n) + " invariance is only asserted for n > " +
                                      std::to_string(level));
  if (!in_subgroup(g, Subgroup::g_level(level)))
    throw Error(Errc::precondition, "element is not in G_" + std::to_string(level));
  return adjoint_fixes(tower, g, xi(tower, n).body);
}

/// Searches the radius-`radius` ball over tower.alphabet(level) for g with
/// pi(g) xi_n != xi_n. Returns nullopt when none is found (inconclusive).
inline std::optional<Word> find_xi_violation(const Tower& tower, unsigned level, std::size_t n,
                                             unsigned radius)
{
  auto body = xi(tower, n).body;
  AdjointFixedTest<Rational> fixes(tower, body);
  for (const auto& g : tower.ball(tower.alphabet(level), radius))
    if (!fixes(g))
      return g;
  return std::nullopt;
}

/// E_{L K_N}: keeps exactly the coefficients on K_N.
template <class Coeff>
L2Vector<Coeff> conditional_expectation(const L2Vector<Coeff>& v, unsigned n)
{
  L2Vector<Coeff> out;
  for (const auto& [g, c] : v.terms())
    if (in_subgroup(g, Subgroup::k_from(n)))
      out.add_term(g, c);
  return out;
}

struct OrthogonalityCheck
{
  Rational lhs_squared; // || u_t y u_t^* - y ||^2, t = g_{N+1}
  Rational rhs_squared; // || y - E_{L K_N}(y) ||^2
  bool summands_disjoint;
  bool decomposition_holds;
  bool pass;

  double lhs() const { return std::sqrt(static_cast<double>(lhs_squared)); }
  double rhs() const { return std::sqrt(static_cast<double>(rhs_squared)); }
};

/// For y supported on K and t = g_{N+1}, checks
///   u_t y u_t^* - y = u_t (y - E(y)) u_t^* + (E(y) - y)
/// with the two summands disjointly supported, hence
///   || u_t y u_t^* - y || >= || y - E(y) ||.
inline OrthogonalityCheck orthogonality_inequality_check(const Tower& tower, const L2Vector<Rational>& y,
                                                         unsigned n)
{
  for (const auto& [g, c] : y.terms())
    if (!in_subgroup(g, Subgroup::k()))
      throw Error(Errc::precondition, "y must be supported on K");
  Word t = tower.stable(n + 1);
  auto ey = conditional_expectation(y, n);
  auto moved = adjoint_apply(tower, t, y) - y;
  auto first = adjoint_apply(tower, t, y - ey);
  auto second = ey - y;

  bool disjoint = true;
  for (const auto& [g, c] : first.terms())
    if (second.terms().count(g) != 0)
      disjoint = false;

  OrthogonalityCheck out;
  out.lhs_squared = moved.norm_squared();
  out.rhs_squared = (y - ey).norm_squared();
  out.summands_disjoint = disjoint;
  out.decomposition_holds = (first + second) == moved;
  out.pass = disjoint && out.decomposition_holds && out.lhs_squared >= out.rhs_squared;
  return out;
}

} // namespace amalg
