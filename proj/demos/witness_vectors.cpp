// Checks that xi_n is fixed by conjugation on a ball of G_N, and shows an
// element two levels up that moves it.

#include <iostream>

#include <amalg/format.hpp>
#include <amalg/witness.hpp>

int main()
{
  amalg::Tower tower;

  unsigned level = 1;
  std::size_t n = 2;
  auto x = amalg::xi(tower, n);
  std::cout << "<delta_e, xi_" << n << ">^2 = " << x.inner_delta_squared(tower.identity()) << '\n';

  auto ball = tower.ball(tower.alphabet(level), 3);
  amalg::AdjointFixedTest<amalg::Rational> fixes(tower, x.body);
  std::size_t moved = 0;
  for (const auto& g : ball)
    moved += !fixes(g);
  std::cout << "ball of radius 3 in G_" << level << ": " << ball.size() << " elements, " << moved
            << " move xi_" << n << '\n';

  if (auto g = amalg::find_xi_violation(tower, 2, 0, 1))
    std::cout << "xi_0 is moved by " << amalg::format(*g) << " in G_2\n";

  auto y = amalg::L2Vector<amalg::Rational>::delta(tower.h(0, 1, 0, 0));
  auto r = amalg::orthogonality_inequality_check(tower, y, 1);
  std::cout << "|| t y t^-1 - y ||^2 = " << r.lhs_squared << " >= " << r.rhs_squared << " = || y - E(y) ||^2\n";
}
