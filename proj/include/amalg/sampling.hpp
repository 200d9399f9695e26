#pragma once


#include <random>

#include "tower.hpp"

namespace amalg {

/// Seeded random elements. Draws use plain modular reduction of a 64-bit
/// Mersenne twister, so sequences do not depend on the standard library.

class WordSampler
{
public:
  WordSampler(const Tower& tower, std::uint64_t seed) : tower_(tower), rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  const Tower& tower() const { return tower_; }

  std::size_t uniform(std::size_t lo, std::size_t hi)
  {
    return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  HnVector hn(std::size_t index)
  {
    auto p = tower_.primes().at(index);
    HnVector h{index, {}};
    for (auto& c : h.coords)
      c = uniform(0, p - 1);
    return h;
  }

  /// A nonzero element of H_index.
  HnVector nonzero_hn(std::size_t index)
  {
    HnVector h;
    do {
      h = hn(index);
    } while (h.is_zero());
    return h;
  }

  /// A K element with support inside [lo, hi].
  KVector kvec(std::size_t lo, std::size_t hi)
  {
    std::vector<HnVector> parts;
    for (std::size_t n = lo; n <= hi; ++n)
      if (uniform(0, 1) == 1)
        parts.push_back(hn(n));
    return KVector::from_components(tower_.primes(), parts);
  }

  Syllable syllable(unsigned max_level, std::size_t max_index)
  {
    auto kind = uniform(0, max_level == 0 ? 1 : 2);
    if (kind == 0)
      return G0Element{{}, elementary_generators()[uniform(0, 11)]};
    if (kind == 1)
      return G0Element{KVector(hn(uniform(0, max_index))), {}};
    Int m = static_cast<long>(uniform(1, 2));
    if (uniform(0, 1) == 1)
      m = -m;
    return StableSyllable{static_cast<unsigned>(uniform(1, max_level)), m};
  }

  RawWord raw(std::size_t max_len, unsigned max_level, std::size_t max_index = 3)
  {
    RawWord w;
    auto len = uniform(0, max_len);
    for (std::size_t i = 0; i < len; ++i)
      w.push_back(syllable(max_level, max_index));
    return w;
  }

  Word word(std::size_t max_len, unsigned max_level, std::size_t max_index = 3)
  {
    return tower_.reduce(raw(max_len, max_level, max_index));
  }

  /// A raw alternating word x_0 t^{m_1} x_1 ... t^{m_r} x_r at `level` with
  /// r >= 1, nonzero exponents and internal x_i outside K_{level-1}; by the
  /// normal form theorem it never represents the identity.
  RawWord reduced_alternating(unsigned level, std::size_t max_r, std::size_t max_index = 3)
  {
    RawWord out;
    auto r = uniform(1, max_r);
    auto piece = [&](bool internal) {
      while (true) {
        auto x = raw(3, level - 1, max_index);
        if (!internal)
          return x;
        auto w = tower_.reduce(x);
        if (!tower_.member(w, Subgroup::k_from(level - 1)))
          return x;
      }
    };
    auto append = [&](const RawWord& x) { out.insert(out.end(), x.begin(), x.end()); };
    append(piece(false));
    for (std::size_t i = 1; i <= r; ++i) {
      Int m = static_cast<long>(uniform(1, 3));
      if (uniform(0, 1) == 1)
        m = -m;
      out.push_back(StableSyllable{level, m});
      append(piece(i < r));
    }
    return out;
  }

private:
  const Tower& tower_;
  std::mt19937_64 rng_;
};

} // namespace amalg
