// Parses a few elements, multiplies them and prints normal forms.

#include <iostream>

#include <amalg/format.hpp>
#include <amalg/parse.hpp>

int main()
{
  amalg::Tower tower; // primes 2, 3, 5, ..., 19

  auto x = amalg::parse_element(tower, "t(2)^3 * h(0;1,0,0) * t(2)^-3");
  auto y = amalg::parse_element(tower, "t(1) * h(1;0,1,0)");
  auto l = amalg::parse_element(tower, "L[1,1,0;0,1,0;0,0,1]");

  std::cout << "x       = " << amalg::format(x) << '\n';
  std::cout << "y       = " << amalg::format(y) << '\n';
  std::cout << "x*y     = " << amalg::format(tower.mul(x, y)) << '\n';
  std::cout << "y^-1    = " << amalg::format(tower.inv(y)) << '\n';
  std::cout << "l y l^-1 = " << amalg::format(tower.conj(y, l)) << '\n';

  // t(1) commutes with K, so this collapses back into K.
  auto k = tower.conj(tower.h(3, 1, 2, 0), tower.stable(1, 5));
  std::cout << "t(1)^5 h(3;1,2,0) t(1)^-5 = " << amalg::format(k)
            << (tower.member(k, amalg::Subgroup::k()) ? "  (in K)" : "") << '\n';

  for (unsigned r = 1; r <= 3; ++r)
    std::cout << "conjugates of t(1) within radius " << r << ": " << tower.conjugate_growth(tower.stable(1), r)
              << '\n';
}
