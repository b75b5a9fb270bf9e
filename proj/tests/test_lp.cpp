// Exact rational simplex: equality-form maximization with nonnegativity.

#include <doctest.h>

#include "lp.hpp"

using namespace gk;

namespace {

std::vector<Rat> R(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("bounded optimum with exact rational value") {
  // max x1 + 2 x2  s.t.  x1 + x2 + s = 4, x2 + t = 3
  std::vector<std::vector<Rat>> a = {R({1, 1, 1, 0}), R({0, 1, 0, 1})};
  LpSolution s = lp_solve(a, R({4, 3}), R({1, 2, 0, 0}));
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == Rat(7));  // x = (1, 3)
  CHECK(s.x[0] == Rat(1));
  CHECK(s.x[1] == Rat(3));
  // exactness: the solution satisfies the constraints with zero residue
  CHECK(s.x[0] + s.x[1] + s.x[2] == Rat(4));
  CHECK(s.x[1] + s.x[3] == Rat(3));
}

TEST_CASE("fractional data stays exact") {
  // max x  s.t.  (2/3) x + s = 1/7  ->  x = 3/14
  std::vector<std::vector<Rat>> a = {{Rat(2, 3), Rat(1)}};
  LpSolution s = lp_solve(a, {Rat(1, 7)}, {Rat(1), Rat(0)});
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == Rat(3, 14));
}

TEST_CASE("infeasibility is detected") {
  // x1 + x2 = -1 with x >= 0
  std::vector<std::vector<Rat>> a = {R({1, 1})};
  LpSolution s = lp_solve(a, R({-1}), R({1, 0}));
  CHECK(s.status == LpStatus::infeasible);

  // contradictory pair: x1 = 1 and x1 = 2
  std::vector<std::vector<Rat>> b = {R({1}), R({1})};
  LpSolution t = lp_solve(b, R({1, 2}), R({0}));
  CHECK(t.status == LpStatus::infeasible);
}

TEST_CASE("unboundedness is detected") {
  // max x1 - x2  s.t.  x1 - x2 = 0: ray (t, t) has value 0... use x1 alone:
  // max x1  s.t.  x1 - x2 = 1: (1 + t, t) is feasible for all t, value grows.
  std::vector<std::vector<Rat>> a = {R({1, -1})};
  LpSolution s = lp_solve(a, R({1}), R({1, 0}));
  CHECK(s.status == LpStatus::unbounded);
}

TEST_CASE("degenerate vertices terminate (Bland)") {
  // redundant constraints meeting at a degenerate vertex
  std::vector<std::vector<Rat>> a = {R({1, 1, 1, 0, 0}), R({1, 1, 0, 1, 0}), R({1, 0, 0, 0, 1})};
  LpSolution s = lp_solve(a, R({2, 2, 2}), R({3, 2, 0, 0, 0}));
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == Rat(6));  // x1 = 2 dominates
}

TEST_CASE("zero objective still reports a feasible point") {
  std::vector<std::vector<Rat>> a = {R({1, 1})};
  LpSolution s = lp_solve(a, R({5}), R({0, 0}));
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == Rat(0));
  CHECK(s.x[0] + s.x[1] == Rat(5));
  CHECK(s.x[0] >= 0);
  CHECK(s.x[1] >= 0);
}
