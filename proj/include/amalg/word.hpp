#pragma once

#include <compare>
#include <span>
#include <variant>
#include <vector>

#include "integer.hpp"
#include "kvector.hpp"
#include "lambda.hpp"

namespace amalg {

/// An element (k, lambda) of G_0 = K x| Lambda, multiplied by
/// (k, l)(k', l') = (k + l.k', l l').
struct G0Element
{
  KVector k;
  LambdaMatrix lambda;

  bool is_identity() const { return k.is_zero() && lambda.is_identity(); }

  friend bool operator==(const G0Element&, const G0Element&) = default;
  friend bool operator<(const G0Element& a, const G0Element& b)
  {
    if (a.k != b.k)
      return a.k < b.k;
    return a.lambda < b.lambda;
  }
};

/// g_level^exponent, the stable letter of G_level = G_{level-1} *_{K_{level-1}} (K_{level-1} x Z).
struct StableSyllable
{
  unsigned level = 1;
  Int exponent = 1;

  friend bool operator==(const StableSyllable&, const StableSyllable&) = default;
};

using Syllable = std::variant<G0Element, StableSyllable>;
using RawWord = std::vector<Syllable>;

/// An element of the inductive limit G in reduced form.
///
/// Level 0 words are G_0 elements. A word of level L >= 1 is
///
///     c_0 t^{m_1} c_1 ... c_{r-1} t^{m_r} x_r,   t = g_L, r >= 1,
///
/// where every piece has level < L, every m_i != 0, and c_0 .. c_{r-1} are
/// the canonical representatives of their left K_{L-1}-cosets in G_{L-1}
/// (c_i != e for i > 0). All K_{L-1} parts are pushed into the final piece,
/// so two words are equal as group elements iff they are equal as values.
///
/// Words are only produced by `Tower`; the invariants are not rechecked here.
class Word
{
public:
  /// Identity.
  Word() = default;

  explicit Word(G0Element base) : base_(std::move(base)) {}

  unsigned level() const noexcept { return level_; }

  bool is_identity() const { return level_ == 0 && base_.is_identity(); }

  /// The G_0 component; meaningful only at level 0.
  const G0Element& base() const noexcept { return base_; }

  std::span<const Word> pieces() const noexcept { return pieces_; }
  std::span<const Int> exponents() const noexcept { return exponents_; }

  /// Number r of stable-letter syllables at the top level.
  std::size_t syllable_count() const noexcept { return exponents_.size(); }

  friend bool operator==(const Word& a, const Word& b)
  {
    return a.level_ == b.level_ && a.base_ == b.base_ && a.exponents_ == b.exponents_ &&
           a.pieces_ == b.pieces_;
  }

  /// Arbitrary but fixed total order, for use as a map key.
  friend bool operator<(const Word& a, const Word& b)
  {
    if (a.level_ != b.level_)
      return a.level_ < b.level_;
    if (a.level_ == 0)
      return a.base_ < b.base_;
    if (a.exponents_.size() != b.exponents_.size())
      return a.exponents_.size() < b.exponents_.size();
    for (std::size_t i = 0; i < a.exponents_.size(); ++i)
      if (a.exponents_[i] != b.exponents_[i])
        return a.exponents_[i] < b.exponents_[i];
    return std::lexicographical_compare(a.pieces_.begin(), a.pieces_.end(), b.pieces_.begin(),
                                        b.pieces_.end());
  }

private:
  friend class Tower;

  Word(unsigned level, std::vector<Word> pieces, std::vector<Int> exponents)
  : level_(level), pieces_(std::move(pieces)), exponents_(std::move(exponents))
  {}

  unsigned level_ = 0;
  G0Element base_;
  std::vector<Word> pieces_;
  std::vector<Int> exponents_;
};

} // namespace amalg
