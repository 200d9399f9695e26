#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace amalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Residues modulo p_n. Primes are assumed to be below 2^31 so products fit.
using Residue = std::uint64_t;

/// Least nonnegative residue of v modulo m (m > 0).
inline Residue residue(const Int& v, std::uint64_t m)
{
  const auto& be = v.backend();
  if (be.size() == 1) {
    std::uint64_t mag = static_cast<std::uint64_t>(be.limbs()[0]) % m;
    return (be.sign() && mag != 0) ? m - mag : mag;
  }
  Int r = v % m;
  if (r < 0)
    r += m;
  return static_cast<Residue>(r);
}

inline Residue residue(std::int64_t v, std::uint64_t m)
{
  auto sm = static_cast<std::int64_t>(m);
  auto r = v % sm;
  return static_cast<Residue>(r < 0 ? r + sm : r);
}

inline Rational inverse_cube(std::uint64_t p)
{
  Int p3 = Int(p) * p * p;
  return Rational(Int(1), p3);
}

} // namespace amalg
