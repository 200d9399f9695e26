#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "coefficients.hpp"
#include "error.hpp"
#include "primes.hpp"

namespace amalg {

/// Truncation of tau(f_N) = prod_{n >= N} (1 - p_n^{-3}) at n = M.
struct TailTrace
{
  Rational partial_product; // prod_{n=N}^{M} (1 - p_n^{-3}), exact
  Rational remainder_bound; // >= sum_{n > M} p_n^{-3}, which bounds the missing factors' effect

  Rational epsilon() const { return 1 - partial_product; }
};

inline TailTrace tail_trace(const PrimeSeq& primes, std::size_t first, std::size_t last)
{
  if (last < first)
    throw Error(Errc::precondition, "tail_trace needs M >= N");
  Rational prod = 1;
  for (std::size_t n = first; n <= last; ++n)
    prod *= 1 - inverse_cube(primes.at(n));
  return {prod, primes.tail_cube_sum_bound(last)};
}

inline Rational epsilon(const PrimeSeq& primes, std::size_t first, std::size_t last)
{
  return tail_trace(primes, first, last).epsilon();
}

/// Atom masses of the product of the two-point spaces {e_n, 1 - e_n},
/// n = first..last. Atom bit i (for n = first + i) set means e_n, of mass
/// p_n^{-3}; atom 0 is f_N = prod (1 - e_n).
inline std::vector<Rational> two_point_atom_masses(const PrimeSeq& primes, std::size_t first,
                                                   std::size_t last)
{
  if (last < first)
    throw Error(Errc::precondition, "atom range needs last >= first");
  std::size_t k = last - first + 1;
  if (k > 20)
    throw Error(Errc::size_guard, "too many two-point factors");
  std::vector<Rational> mass(std::size_t{1} << k, Rational(1));
  for (std::size_t atom = 0; atom < mass.size(); ++atom)
    for (std::size_t i = 0; i < k; ++i) {
      auto q = inverse_cube(primes.at(first + i));
      mass[atom] *= ((atom >> i) & 1) ? q : 1 - q;
    }
  return mass;
}

struct DeviationCheck
{
  double lhs;   // ||a - tau(a) 1||_2
  double bound; // 4 sqrt(eps_N) at the truncation
  bool pass;
};

namespace detail {

inline double to_double(const Rational& r) { return static_cast<double>(r); }
inline double to_double(double d) { return d; }

} // namespace detail

/// Verifies ||a - tau(a)1||_2 <= 4 sqrt(eps_N) for a function a of sup-norm
/// <= 1 on the atoms of two_point_atom_masses(first, last).
///
/// With exact rational values the comparison is done on squares without
/// rounding; with complex values it is done in double precision.
inline DeviationCheck deviation_bound_check(const PrimeSeq& primes, std::size_t first, std::size_t last,
                                            const std::vector<Rational>& values)
{
  auto mass = two_point_atom_masses(primes, first, last);
  if (values.size() != mass.size())
    throw Error(Errc::precondition, "one value per atom required");
  Rational mean = 0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (abs_squared(values[i]) > 1)
      throw Error(Errc::precondition, "function is outside the unit ball");
    mean += mass[i] * values[i];
  }
  Rational lhs_sq = 0;
  for (std::size_t i = 0; i < mass.size(); ++i)
    lhs_sq += mass[i] * abs_squared(values[i] - mean);
  Rational bound_sq = 16 * epsilon(primes, first, last);
  return {std::sqrt(detail::to_double(lhs_sq)), std::sqrt(detail::to_double(bound_sq)), lhs_sq <= bound_sq};
}

inline DeviationCheck deviation_bound_check(const PrimeSeq& primes, std::size_t first, std::size_t last,
                                            const std::vector<Complex>& values)
{
  auto mass = two_point_atom_masses(primes, first, last);
  if (values.size() != mass.size())
    throw Error(Errc::precondition, "one value per atom required");
  Complex mean = 0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (std::abs(values[i]) > 1)
      throw Error(Errc::precondition, "function is outside the unit ball");
    mean += detail::to_double(mass[i]) * values[i];
  }
  double lhs_sq = 0;
  for (std::size_t i = 0; i < mass.size(); ++i)
    lhs_sq += detail::to_double(mass[i]) * std::norm(values[i] - mean);
  double bound = 4 * std::sqrt(detail::to_double(epsilon(primes, first, last)));
  double lhs = std::sqrt(lhs_sq);
  return {lhs, bound, lhs <= bound};
}

} // namespace amalg
