#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace amalg {

/// Exact row reduction of sparse rows over a field, one row at a time.
///
/// Each incoming row is fully reduced: every entry sitting in a pivot column
/// is eliminated. What remains is either zero (dependent) or is normalised at
/// its last column, which becomes a new pivot. Stored rows vanish on all
/// later pivot columns, so they stay independent; rank() counts them.
template <class Field>
class SparseEliminator
{
public:
  using Row = std::vector<std::pair<std::size_t, Field>>; // sorted by column, no zeros

  /// Returns true if the row was independent of the rows seen so far.
  bool add_row(Row row)
  {
    while (true) {
      auto hit = std::find_if(row.begin(), row.end(),
                              [&](const auto& entry) { return pivots_.count(entry.first) != 0; });
      if (hit == row.end())
        break;
      Field s = hit->second;
      row = subtract_multiple(row, s, pivots_.at(hit->first));
    }
    if (row.empty())
      return false;
    Field lead = row.back().second;
    for (auto& [col, v] : row)
      v /= lead;
    auto col = row.back().first;
    pivots_.emplace(col, std::move(row));
    return true;
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

private:
  static Row subtract_multiple(const Row& a, const Field& s, const Row& b)
  {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -(s * b[j].second));
        ++j;
      } else {
        Field v = a[i].second - s * b[j].second;
        if (v != Field{})
          out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::unordered_map<std::size_t, Row> pivots_;
};

} // namespace amalg
