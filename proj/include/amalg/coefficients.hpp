#pragma once

#include <complex>
#include <map>

#include "integer.hpp"
#include "word.hpp"

namespace amalg {

using Complex = std::complex<double>;

inline Rational abs_squared(const Rational& c) { return c * c; }
inline double abs_squared(const Complex& c) { return std::norm(c); }
inline Rational conjugate(const Rational& c) { return c; }
inline Complex conjugate(const Complex& c) { return std::conj(c); }

namespace detail {

/// Finitely supported coefficients on reduced words; zero coefficients are
/// never stored, so value equality is exact equality of the combinations.
template <class Coeff>
class SparseCoeffs
{
public:
  using Map = std::map<Word, Coeff>;

  const Map& terms() const noexcept { return terms_; }
  std::size_t support_size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coeff(const Word& g) const
  {
    auto it = terms_.find(g);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void add_term(const Word& g, const Coeff& c)
  {
    if (c == Coeff{})
      return;
    auto [it, fresh] = terms_.try_emplace(g, c);
    if (!fresh) {
      it->second += c;
      if (it->second == Coeff{})
        terms_.erase(it);
    }
  }

  auto norm_squared() const
  {
    decltype(abs_squared(Coeff{})) s{};
    for (const auto& [g, c] : terms_)
      s += abs_squared(c);
    return s;
  }

protected:
  Map terms_;
};

} // namespace detail

} // namespace amalg
