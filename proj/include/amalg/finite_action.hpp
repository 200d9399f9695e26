#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "kvector.hpp"
#include "lambda.hpp"
#include "primes.hpp"
#include "sparse_rank.hpp"

namespace amalg {

inline constexpr std::size_t kDefaultSizeGuard = 10'000'000;

/// The natural action of SL(3,Z) on H_n, reduced mod p_n.
inline HnVector act_mod_p(const PrimeSeq& primes, const LambdaMatrix& g, const HnVector& x)
{
  return {x.index, g.act(x.coords, primes.at(x.index))};
}

/// The finite product H_{i_1} x ... x H_{i_N}, enumerated in lexicographic
/// order: point codes are mixed-radix numbers with the first factor most
/// significant and coordinates (a, b, c) encoded as (a p + b) p + c.
class ProductDomain
{
public:
  ProductDomain(const PrimeSeq& primes, std::vector<std::size_t> indices,
                std::size_t size_guard = kDefaultSizeGuard)
  : indices_(std::move(indices))
  {
    std::set<std::size_t> seen;
    size_ = 1;
    for (auto n : indices_) {
      if (!seen.insert(n).second)
        throw Error(Errc::precondition, "repeated index " + std::to_string(n));
      auto p = primes.at(n);
      primes_.push_back(p);
      radix_.push_back(p * p * p);
      if (size_ > size_guard / radix_.back())
        throw Error(Errc::size_guard, "product domain exceeds " + std::to_string(size_guard) + " points");
      size_ *= radix_.back();
    }
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t factor_count() const noexcept { return indices_.size(); }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  std::size_t factor_size(std::size_t i) const { return radix_[i]; }

  /// Local codes (one per factor) of a point.
  std::vector<std::size_t> split(std::size_t code) const
  {
    std::vector<std::size_t> local(radix_.size());
    for (std::size_t i = radix_.size(); i-- > 0;) {
      local[i] = code % radix_[i];
      code /= radix_[i];
    }
    return local;
  }

  std::size_t join(const std::vector<std::size_t>& local) const
  {
    std::size_t code = 0;
    for (std::size_t i = 0; i < radix_.size(); ++i)
      code = code * radix_[i] + local[i];
    return code;
  }

  Triple coords(std::size_t factor, std::size_t local) const
  {
    auto p = primes_[factor];
    return {local / (p * p), (local / p) % p, local % p};
  }

  std::size_t local_code(std::size_t factor, const Triple& x) const
  {
    auto p = primes_[factor];
    return (x[0] * p + x[1]) * p + x[2];
  }

  std::vector<HnVector> point(std::size_t code) const
  {
    auto local = split(code);
    std::vector<HnVector> out;
    for (std::size_t i = 0; i < local.size(); ++i)
      out.push_back({indices_[i], coords(i, local[i])});
    return out;
  }

  /// Bit i set iff the i-th component is nonzero.
  std::uint64_t zero_pattern(std::size_t code) const
  {
    auto local = split(code);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < local.size(); ++i)
      if (local[i] != 0)
        mask |= std::uint64_t{1} << i;
    return mask;
  }

  /// Permutation of the factor-local codes induced by g.
  std::vector<std::size_t> local_permutation(std::size_t factor, const LambdaMatrix& g) const
  {
    std::vector<std::size_t> perm(radix_[factor]);
    for (std::size_t x = 0; x < perm.size(); ++x)
      perm[x] = local_code(factor, g.act(coords(factor, x), primes_[factor]));
    return perm;
  }

  /// The diagonal action of g as a permutation of all point codes.
  std::vector<std::size_t> permutation(const LambdaMatrix& g) const
  {
    std::vector<std::vector<std::size_t>> local;
    for (std::size_t i = 0; i < factor_count(); ++i)
      local.push_back(local_permutation(i, g));
    std::vector<std::size_t> perm(size_);
    std::vector<std::size_t> digits(factor_count(), 0);
    for (std::size_t code = 0; code < size_; ++code) {
      std::size_t image = 0;
      for (std::size_t i = 0; i < digits.size(); ++i)
        image = image * radix_[i] + local[i][digits[i]];
      perm[code] = image;
      for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < radix_[i])
          break;
        digits[i] = 0;
      }
    }
    return perm;
  }

private:
  std::vector<std::size_t> indices_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::size_t> radix_;
  std::size_t size_ = 1;
};

struct OrbitBlock
{
  std::size_t representative; // least point code in the block
  std::size_t size;
};

/// Orbits of the diagonal Lambda-action on a ProductDomain.
struct OrbitPartition
{
  ProductDomain domain;
  std::vector<OrbitBlock> blocks;        // ordered by representative
  std::vector<std::uint32_t> block_of;   // point code -> block id

  /// True iff the blocks are exactly the sets U_1 x ... x U_N with each U_i
  /// either {0} or H_i \ {0}: the zero pattern is constant on every block and
  /// distinct blocks have distinct patterns, and all 2^N patterns occur.
  bool matches_zero_pattern_classification() const
  {
    std::vector<std::int64_t> pattern_of_block(blocks.size(), -1);
    std::set<std::uint64_t> patterns;
    for (std::size_t code = 0; code < block_of.size(); ++code) {
      auto pat = static_cast<std::int64_t>(domain.zero_pattern(code));
      auto& slot = pattern_of_block[block_of[code]];
      if (slot == -1)
        slot = pat;
      else if (slot != pat)
        return false;
    }
    for (auto pat : pattern_of_block)
      if (!patterns.insert(static_cast<std::uint64_t>(pat)).second)
        return false;
    return patterns.size() == (std::size_t{1} << domain.factor_count());
  }

  std::vector<std::size_t> sizes() const
  {
    std::vector<std::size_t> out;
    for (const auto& b : blocks)
      out.push_back(b.size);
    return out;
  }
};

/// Closure of each point under the twelve elementary generators acting
/// diagonally. Deterministic: blocks are discovered from the least unvisited
/// point, so representatives are lexicographically least.
inline OrbitPartition diagonal_orbits(const PrimeSeq& primes, std::vector<std::size_t> indices,
                                      std::size_t size_guard = kDefaultSizeGuard)
{
  ProductDomain domain(primes, std::move(indices), size_guard);
  std::vector<std::vector<std::size_t>> gens;
  for (const auto& g : elementary_generators())
    gens.push_back(domain.permutation(g));

  constexpr auto unseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> block_of(domain.size(), unseen);
  std::vector<OrbitBlock> blocks;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < domain.size(); ++start) {
    if (block_of[start] != unseen)
      continue;
    auto id = static_cast<std::uint32_t>(blocks.size());
    blocks.push_back({start, 1});
    block_of[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (const auto& perm : gens) {
        auto y = perm[x];
        if (block_of[y] == unseen) {
          block_of[y] = id;
          ++blocks.back().size;
          stack.push_back(y);
        }
      }
    }
  }
  return {std::move(domain), std::move(blocks), std::move(block_of)};
}

/// Dimension of the space of functions F on the domain with F(g.x) = F(x)
/// for every elementary generator g, by exact elimination of the invariance
/// equations F(g.x) - F(x) = 0. Independent of the orbit search.
inline std::size_t fixed_point_dimension(const PrimeSeq& primes, std::vector<std::size_t> indices,
                                         std::size_t size_guard = kDefaultSizeGuard)
{
  ProductDomain domain(primes, std::move(indices), size_guard);
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& g : elementary_generators())
    perms.push_back(domain.permutation(g));
  SparseEliminator<Rational> elim;
  for (std::size_t x = 0; x < domain.size(); ++x)
    for (const auto& perm : perms) {
      auto y = perm[x];
      if (x == y)
        continue;
      auto lo = std::min(x, y), hi = std::max(x, y);
      elim.add_row({{lo, Rational(lo == x ? -1 : 1)}, {hi, Rational(hi == x ? -1 : 1)}});
    }
  return domain.size() - elim.rank();
}

} // namespace amalg
