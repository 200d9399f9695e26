#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

namespace amalg {

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// The sequence of distinct primes p_0, p_1, ... indexing the factors H_n.
///
/// Only a finite prefix is ever held. Indices past the prefix are an error;
/// `extended` appends the smallest primes larger than every configured one.
class PrimeSeq
{
public:
  /// 2, 3, 5, ..., 19.
  PrimeSeq() : PrimeSeq(first(8)) {}

  explicit PrimeSeq(std::vector<std::uint64_t> primes) : primes_(std::move(primes))
  {
    if (primes_.empty())
      throw Error(Errc::invalid_config, "prime sequence must not be empty");
    std::set<std::uint64_t> seen;
    for (auto p : primes_) {
      if (!is_prime(p))
        throw Error(Errc::invalid_config, std::to_string(p) + " is not prime");
      if (p >= (std::uint64_t{1} << 31))
        throw Error(Errc::invalid_config, std::to_string(p) + " exceeds the residue range");
      if (!seen.insert(p).second)
        throw Error(Errc::invalid_config, "duplicate prime " + std::to_string(p));
    }
  }

  static PrimeSeq first(std::size_t count)
  {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t c = 2; ps.size() < count; ++c)
      if (is_prime(c))
        ps.push_back(c);
    return PrimeSeq(std::move(ps));
  }

  std::size_t size() const noexcept { return primes_.size(); }

  std::uint64_t at(std::size_t n) const
  {
    if (n >= primes_.size())
      throw Error(Errc::index_out_of_range,
                  "index " + std::to_string(n) + " has no configured prime (only " +
                    std::to_string(primes_.size()) + " configured)");
    return primes_[n];
  }

  std::uint64_t operator[](std::size_t n) const { return at(n); }

  std::span<const std::uint64_t> values() const noexcept { return primes_; }

  std::uint64_t max() const { return *std::max_element(primes_.begin(), primes_.end()); }

  PrimeSeq extended(std::size_t count) const
  {
    auto ps = primes_;
    for (std::uint64_t c = max() + 1; ps.size() < count; ++c)
      if (is_prime(c))
        ps.push_back(c);
    return PrimeSeq(std::move(ps));
  }

  /// Upper bound for sum_{n > last} p_n^{-3} over the infinite continuation.
  ///
  /// Configured terms are summed exactly; the continuation by `extended`
  /// only uses integers above max(), whose cubes sum to at most 1/(2 max^2).
  Rational tail_cube_sum_bound(std::size_t last) const
  {
    Rational sum = 0;
    for (std::size_t n = last + 1; n < primes_.size(); ++n)
      sum += inverse_cube(primes_[n]);
    Int m = max();
    return sum + Rational(Int(1), 2 * m * m);
  }

  friend bool operator==(const PrimeSeq&, const PrimeSeq&) = default;

private:
  std::vector<std::uint64_t> primes_;
};

} // namespace amalg
