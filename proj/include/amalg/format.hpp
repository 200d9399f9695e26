#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "word.hpp"

namespace amalg {

namespace detail {

inline void collect_factors(const Word& w, std::vector<std::string>& out)
{
  if (w.level() == 0) {
    for (const auto& h : w.base().k.support()) {
      std::ostringstream os;
      os << "h(" << h.index << ';' << h.coords[0] << ',' << h.coords[1] << ',' << h.coords[2] << ')';
      out.push_back(os.str());
    }
    const auto& m = w.base().lambda;
    if (!m.is_identity()) {
      std::ostringstream os;
      os << "L[";
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c)
          os << m(r, c) << (c < 2 ? "," : "");
        os << (r < 2 ? ";" : "]");
      }
      out.push_back(os.str());
    }
    return;
  }
  auto pieces = w.pieces();
  auto exps = w.exponents();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    collect_factors(pieces[i], out);
    if (i < exps.size()) {
      auto t = "t(" + std::to_string(w.level()) + ")";
      out.push_back(exps[i] == 1 ? t : t + "^" + exps[i].str());
    }
  }
}

} // namespace detail

/// Renders a reduced word in the element grammar, e.g.
/// `h(0;1,0,1) * L[1,1,0;0,1,0;0,0,1] * t(2)^-3`.
inline std::string format(const Word& w)
{
  std::vector<std::string> factors;
  detail::collect_factors(w, factors);
  if (factors.empty())
    return "e";
  std::string out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    out += " * " + factors[i];
  return out;
}

} // namespace amalg
