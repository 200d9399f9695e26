#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "integer.hpp"
#include "primes.hpp"

namespace amalg {

using Triple = std::array<Residue, 3>;

/// An element of H_n = (Z/p_n)^3.
struct HnVector
{
  std::size_t index = 0;
  Triple coords{};

  bool is_zero() const noexcept { return coords == Triple{}; }

  friend auto operator<=>(const HnVector&, const HnVector&) = default;
};

inline HnVector make_hn(const PrimeSeq& primes, std::size_t n, std::int64_t a, std::int64_t b,
                        std::int64_t c)
{
  auto p = primes.at(n);
  return {n, {residue(a, p), residue(b, p), residue(c, p)}};
}

/// A finitely supported element of K = (+)_n H_n. Only nonzero components are
/// stored, sorted by index; the empty vector is the identity.
class KVector
{
public:
  KVector() = default;

  explicit KVector(HnVector h)
  {
    if (!h.is_zero())
      support_.push_back(h);
  }

  /// Components may come in any order; repeated indices are summed.
  static KVector from_components(const PrimeSeq& primes, std::span<const HnVector> parts)
  {
    KVector out;
    for (const auto& h : parts)
      out = add(primes, out, KVector(h));
    return out;
  }

  bool is_zero() const noexcept { return support_.empty(); }
  std::span<const HnVector> support() const noexcept { return support_; }

  std::optional<std::size_t> min_index() const
  {
    if (support_.empty())
      return std::nullopt;
    return support_.front().index;
  }

  /// Component at index n (zero if absent).
  Triple component(std::size_t n) const
  {
    auto it = std::lower_bound(support_.begin(), support_.end(), n,
                               [](const HnVector& h, std::size_t i) { return h.index < i; });
    if (it != support_.end() && it->index == n)
      return it->coords;
    return {};
  }

  /// True iff the vector lies in K_n.
  bool supported_from(std::size_t n) const { return support_.empty() || support_.front().index >= n; }

  KVector restrict_below(std::size_t n) const
  {
    KVector out;
    for (const auto& h : support_)
      if (h.index < n)
        out.support_.push_back(h);
    return out;
  }

  KVector restrict_from(std::size_t n) const
  {
    KVector out;
    for (const auto& h : support_)
      if (h.index >= n)
        out.support_.push_back(h);
    return out;
  }

  static KVector add(const PrimeSeq& primes, const KVector& a, const KVector& b)
  {
    KVector out;
    out.support_.reserve(a.support_.size() + b.support_.size());
    auto i = a.support_.begin();
    auto j = b.support_.begin();
    while (i != a.support_.end() || j != b.support_.end()) {
      if (j == b.support_.end() || (i != a.support_.end() && i->index < j->index)) {
        out.support_.push_back(*i++);
      } else if (i == a.support_.end() || j->index < i->index) {
        out.support_.push_back(*j++);
      } else {
        auto p = primes.at(i->index);
        HnVector s{i->index, {}};
        for (int c = 0; c < 3; ++c)
          s.coords[c] = (i->coords[c] + j->coords[c]) % p;
        if (!s.is_zero())
          out.support_.push_back(s);
        ++i;
        ++j;
      }
    }
    return out;
  }

  static KVector negate(const PrimeSeq& primes, const KVector& a)
  {
    KVector out = a;
    for (auto& h : out.support_) {
      auto p = primes.at(h.index);
      for (auto& c : h.coords)
        c = (p - c) % p;
    }
    return out;
  }

  friend auto operator<=>(const KVector&, const KVector&) = default;
  friend bool operator==(const KVector&, const KVector&) = default;

private:
  std::vector<HnVector> support_;

  template <class F>
  friend KVector transform_components(const KVector&, F&&);
};

/// Applies an index-preserving map to every component, dropping zeros.
template <class F>
KVector transform_components(const KVector& k, F&& f)
{
  KVector out;
  out.support_.reserve(k.support_.size());
  for (const auto& h : k.support_) {
    HnVector image{h.index, f(h)};
    if (!image.is_zero())
      out.support_.push_back(image);
  }
  return out;
}

} // namespace amalg
