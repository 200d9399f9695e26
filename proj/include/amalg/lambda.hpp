#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "kvector.hpp"

namespace amalg {

/// An element of SL(3, Z), stored row-major with arbitrary-precision entries.
class LambdaMatrix
{
public:
  using Entries = std::array<Int, 9>;

  /// Identity.
  LambdaMatrix() : e_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}

  static LambdaMatrix from_entries(Entries entries)
  {
    LambdaMatrix m(std::move(entries), 0);
    if (m.determinant() != 1)
      throw Error(Errc::precondition, "matrix determinant is " + m.determinant().str() + ", not 1");
    return m;
  }

  /// E_ij(s): identity plus s at row i, column j (0-based, i != j).
  static LambdaMatrix elementary(int i, int j, const Int& s)
  {
    if (i == j || i < 0 || j < 0 || i > 2 || j > 2)
      throw Error(Errc::precondition, "elementary matrix needs distinct indices in 0..2");
    LambdaMatrix m;
    m.e_[i * 3 + j] = s;
    return m;
  }

  const Int& operator()(int r, int c) const { return e_[r * 3 + c]; }
  const Entries& entries() const noexcept { return e_; }

  bool is_identity() const
  {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (e_[r * 3 + c] != (r == c ? 1 : 0))
          return false;
    return true;
  }

  Int determinant() const
  {
    const auto& a = e_;
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
  }

  friend LambdaMatrix operator*(const LambdaMatrix& x, const LambdaMatrix& y)
  {
    if (x.is_identity())
      return y;
    if (y.is_identity())
      return x;
    Entries out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        Int s = 0;
        for (int k = 0; k < 3; ++k)
          s += x.e_[r * 3 + k] * y.e_[k * 3 + c];
        out[r * 3 + c] = std::move(s);
      }
    return LambdaMatrix(std::move(out), 0);
  }

  /// Adjugate; exact because the determinant is 1.
  LambdaMatrix inverse() const
  {
    const auto& a = e_;
    Entries out{a[4] * a[8] - a[5] * a[7], a[2] * a[7] - a[1] * a[8], a[1] * a[5] - a[2] * a[4],
                a[5] * a[6] - a[3] * a[8], a[0] * a[8] - a[2] * a[6], a[2] * a[3] - a[0] * a[5],
                a[3] * a[7] - a[4] * a[6], a[1] * a[6] - a[0] * a[7], a[0] * a[4] - a[1] * a[3]};
    return LambdaMatrix(std::move(out), 0);
  }

  LambdaMatrix transpose() const
  {
    Entries out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        out[c * 3 + r] = e_[r * 3 + c];
    return LambdaMatrix(std::move(out), 0);
  }

  /// Matrix-vector product reduced modulo p.
  Triple act(const Triple& x, std::uint64_t p) const
  {
    Triple out{};
    for (int r = 0; r < 3; ++r) {
      Residue s = 0;
      for (int c = 0; c < 3; ++c)
        s = (s + residue(e_[r * 3 + c], p) * x[c]) % p;
      out[r] = s;
    }
    return out;
  }

  friend bool operator==(const LambdaMatrix&, const LambdaMatrix&) = default;
  friend bool operator<(const LambdaMatrix& x, const LambdaMatrix& y)
  {
    return std::lexicographical_compare(x.e_.begin(), x.e_.end(), y.e_.begin(), y.e_.end());
  }

private:
  LambdaMatrix(Entries e, int) : e_(std::move(e)) {}

  Entries e_;
};

/// Diagonal action on K: (g . x)_n = g . x_n.
inline KVector act(const PrimeSeq& primes, const LambdaMatrix& g, const KVector& k)
{
  if (g.is_identity())
    return k;
  return transform_components(k, [&](const HnVector& h) { return g.act(h.coords, primes.at(h.index)); });
}

/// The twelve elementary matrices E_ij(+1), E_ij(-1), i != j, in a fixed order.
inline const std::vector<LambdaMatrix>& elementary_generators()
{
  static const std::vector<LambdaMatrix> gens = [] {
    std::vector<LambdaMatrix> out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) {
          out.push_back(LambdaMatrix::elementary(i, j, 1));
          out.push_back(LambdaMatrix::elementary(i, j, -1));
        }
    return out;
  }();
  return gens;
}

/// All products of at most `radius` elementary generators, sorted.
inline std::vector<LambdaMatrix> lambda_ball(unsigned radius)
{
  std::set<LambdaMatrix> ball{LambdaMatrix{}};
  std::vector<LambdaMatrix> frontier{LambdaMatrix{}};
  for (unsigned r = 0; r < radius; ++r) {
    std::vector<LambdaMatrix> next;
    for (const auto& m : frontier)
      for (const auto& g : elementary_generators()) {
        auto prod = m * g;
        if (ball.insert(prod).second)
          next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return {ball.begin(), ball.end()};
}

} // namespace amalg
