#pragma once

#include <cstddef>

#include "coefficients.hpp"
#include "tower.hpp"

namespace amalg {

/// A finite combination sum_g c_g u_g in the group algebra of G.
template <class Coeff>
class GroupAlgebraElement : public detail::SparseCoeffs<Coeff>
{
public:
  GroupAlgebraElement() = default;

  /// u_g with coefficient c.
  static GroupAlgebraElement unitary(const Word& g, const Coeff& c = Coeff{1})
  {
    GroupAlgebraElement x;
    x.add_term(g, c);
    return x;
  }

  /// tau(x) = <delta_e, x delta_e>, the coefficient at the identity.
  Coeff trace() const { return this->coeff(Word{}); }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b)
  {
    for (const auto& [g, c] : b.terms_)
      a.add_term(g, c);
    return a;
  }

  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b)
  {
    for (const auto& [g, c] : b.terms_)
      a.add_term(g, -c);
    return a;
  }

  friend GroupAlgebraElement operator*(const Coeff& s, const GroupAlgebraElement& a)
  {
    GroupAlgebraElement out;
    for (const auto& [g, c] : a.terms_)
      out.add_term(g, s * c);
    return out;
  }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
  {
    return a.terms_ == b.terms_;
  }
};

/// Product in the group algebra: u_g u_h = u_{gh}.
template <class Coeff>
GroupAlgebraElement<Coeff> convolve(const Tower& tower, const GroupAlgebraElement<Coeff>& a,
                                    const GroupAlgebraElement<Coeff>& b)
{
  GroupAlgebraElement<Coeff> out;
  for (const auto& [g, x] : a.terms())
    for (const auto& [h, y] : b.terms())
      out.add_term(tower.mul(g, h), x * y);
  return out;
}

/// x^* = sum conj(c_g) u_{g^{-1}}.
template <class Coeff>
GroupAlgebraElement<Coeff> adjoint(const Tower& tower, const GroupAlgebraElement<Coeff>& a)
{
  GroupAlgebraElement<Coeff> out;
  for (const auto& [g, c] : a.terms())
    out.add_term(tower.inv(g), conjugate(c));
  return out;
}

/// The averaging projection p_n^{-3} sum_{h in H_n} u_h, exact.
inline GroupAlgebraElement<Rational> projection_en(const Tower& tower, std::size_t n)
{
  auto p = tower.primes().at(n);
  Rational w = inverse_cube(p);
  GroupAlgebraElement<Rational> e;
  for (Residue a = 0; a < p; ++a)
    for (Residue b = 0; b < p; ++b)
      for (Residue c = 0; c < p; ++c)
        e.add_term(tower.k(KVector(HnVector{n, {a, b, c}})), w);
  return e;
}

} // namespace amalg
