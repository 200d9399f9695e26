#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "error.hpp"
#include "finite_action.hpp"
#include "group_algebra.hpp"

namespace amalg {

/// A complex function on a finite product of H_n's; values are indexed by the
/// domain's point codes. The trace is the normalized counting measure.
struct FiniteFunction
{
  ProductDomain domain;
  std::vector<Complex> values;

  explicit FiniteFunction(ProductDomain d) : domain(std::move(d)), values(domain.size()) {}

  FiniteFunction(ProductDomain d, std::vector<Complex> v) : domain(std::move(d)), values(std::move(v))
  {
    if (values.size() != domain.size())
      throw Error(Errc::precondition, "value count does not match the domain");
  }

  Complex trace() const
  {
    Complex s = 0;
    for (const auto& v : values)
      s += v;
    return s / static_cast<double>(values.size());
  }

  /// L^2 norm squared for the normalized counting measure.
  double norm_squared() const
  {
    double s = 0;
    for (const auto& v : values)
      s += std::norm(v);
    return s / static_cast<double>(values.size());
  }
};

namespace detail {

inline void require_single_factor(const ProductDomain& d)
{
  if (d.factor_count() != 1)
    throw Error(Errc::precondition, "Fourier transform needs a single H_n factor");
}

// In-place DFT along each of the three coordinate axes of a p^3 cube:
// out(x) = sum_y in(y) exp(sign 2 pi i <x, y> / p).
inline std::vector<Complex> cube_dft(std::vector<Complex> data, std::uint64_t p, int sign)
{
  std::vector<Complex> roots(p);
  for (std::uint64_t k = 0; k < p; ++k) {
    double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
    roots[k] = {std::cos(angle), std::sin(angle)};
  }
  std::size_t strides[3] = {p * p, p, 1};
  std::vector<Complex> line(p);
  for (auto stride : strides) {
    for (std::size_t base = 0; base < data.size(); ++base) {
      if ((base / stride) % p != 0)
        continue; // not the start of a line along this axis
      for (std::uint64_t x = 0; x < p; ++x) {
        Complex s = 0;
        for (std::uint64_t y = 0; y < p; ++y)
          s += data[base + y * stride] * roots[(x * y) % p];
        line[x] = s;
      }
      for (std::uint64_t x = 0; x < p; ++x)
        data[base + x * stride] = line[x];
    }
  }
  return data;
}

} // namespace detail

/// alpha_n(f) = sum_x c(x) u_x with c(x) = p^{-3} sum_y f(y) exp(-2 pi i <x,y>/p),
/// i.e. the character chi_x(y) = exp(2 pi i <x,y>/p) is sent to u_x.
inline GroupAlgebraElement<Complex> fourier(const Tower& tower, const FiniteFunction& f)
{
  detail::require_single_factor(f.domain);
  auto p = f.domain.primes()[0];
  auto n = f.domain.indices()[0];
  auto spectrum = detail::cube_dft(f.values, p, -1);
  double scale = 1.0 / static_cast<double>(p * p * p);
  GroupAlgebraElement<Complex> out;
  for (std::size_t x = 0; x < spectrum.size(); ++x)
    out.add_term(tower.k(KVector(HnVector{n, f.domain.coords(0, x)})), spectrum[x] * scale);
  return out;
}

/// Inverse of `fourier`: f(y) = sum_x c(x) chi_x(y). Terms outside H_n are rejected.
inline FiniteFunction inverse_fourier(const Tower& tower, const GroupAlgebraElement<Complex>& a,
                                      std::size_t n)
{
  ProductDomain domain(tower.primes(), {n});
  auto p = domain.primes()[0];
  std::vector<Complex> coeffs(domain.size());
  for (const auto& [g, c] : a.terms()) {
    if (!in_subgroup(g, Subgroup::k()))
      throw Error(Errc::precondition, "term outside L H_n");
    const auto& k = g.base().k;
    if (!k.is_zero() && (k.support().size() != 1 || k.support()[0].index != n))
      throw Error(Errc::precondition, "term outside L H_n");
    coeffs[domain.local_code(0, k.component(n))] += c;
  }
  return FiniteFunction(domain, detail::cube_dft(std::move(coeffs), p, +1));
}

/// (theta_g F)(x) = F(g^{-1} . x), diagonally on every factor.
inline FiniteFunction theta(const LambdaMatrix& g, const FiniteFunction& f)
{
  auto perm = f.domain.permutation(g.inverse());
  FiniteFunction out(f.domain);
  for (std::size_t x = 0; x < f.values.size(); ++x)
    out.values[x] = f.values[perm[x]];
  return out;
}

/// sigma_g(u_x) = u_{g.x} on elements supported in K.
template <class Coeff>
GroupAlgebraElement<Coeff> sigma(const Tower& tower, const LambdaMatrix& g,
                                 const GroupAlgebraElement<Coeff>& a)
{
  GroupAlgebraElement<Coeff> out;
  for (const auto& [w, c] : a.terms()) {
    if (!in_subgroup(w, Subgroup::k()))
      throw Error(Errc::precondition, "sigma is defined on L K only");
    out.add_term(tower.k(act(tower.primes(), g, w.base().k)), c);
  }
  return out;
}

/// sup over the point-mass basis of || alpha_n(theta_g f) - sigma_{(g^{-1})^T}(alpha_n f) ||_2.
inline double check_intertwiner(const Tower& tower, const LambdaMatrix& g, std::size_t n)
{
  ProductDomain domain(tower.primes(), {n});
  auto dual = g.inverse().transpose();
  double worst = 0;
  for (std::size_t y = 0; y < domain.size(); ++y) {
    FiniteFunction f(domain);
    f.values[y] = 1;
    auto lhs = fourier(tower, theta(g, f));
    auto rhs = sigma(tower, dual, fourier(tower, f));
    worst = std::max(worst, std::sqrt((lhs - rhs).norm_squared()));
  }
  return worst;
}

} // namespace amalg
