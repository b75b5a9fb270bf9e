// Lattice Groebner bases: normal forms against brute-force fiber minima,
// containment in the Graver basis, and determinism of the reduced basis.

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "families.hpp"
#include "fiber.hpp"
#include "graver.hpp"
#include "groebner.hpp"
#include "order.hpp"

using namespace gk;

namespace {

Vec V(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

TermOrder random_order(std::mt19937_64& rng, int n) {
  TermOrder ord;
  ord.n = n;
  std::uniform_int_distribution<int> num(0, 12), den(1, 4);
  ord.cost.resize(n);
  for (int i = 0; i < n; ++i) {
    ord.cost[i] = Rat(num(rng), den(rng));
    ord.cost[i].canonicalize();
  }
  ord.tie = (rng() & 1) ? TieBreak::degrevlex : TieBreak::lex;
  ord.perm.resize(n);
  std::iota(ord.perm.begin(), ord.perm.end(), 0);
  std::shuffle(ord.perm.begin(), ord.perm.end(), rng);
  ord.validate();
  return ord;
}

// A random matrix whose fibers are guaranteed finite: an all-ones first row
// pins the coordinate sum of every nonnegative kernel point to zero.
IntMatrix random_bounded_matrix(std::mt19937_64& rng, int cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  IntMatrix m{2, cols};
  for (int j = 0; j < cols; ++j) {
    m.at(0, j) = 1;
    m.at(1, j) = entry(rng);
  }
  return m;
}

Vec order_min(const TermOrder& ord, const std::vector<Vec>& fiber) {
  REQUIRE(!fiber.empty());
  Vec best = fiber.front();
  for (const Vec& p : fiber)
    if (ord.compare(p, best) < 0) best = p;
  return best;
}

}  // namespace

TEST_CASE("a one-relation ideal under lex") {
  IntMatrix m = IntMatrix::from_rows({V({1, 1})}, 2);
  GroebnerBasis gb = groebner(m, TermOrder::lex_order(2));
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0] == V({1, -1}));  // oriented: leading part first

  CHECK(normal_form(gb, V({3, 0})) == V({0, 3}));
  CHECK(normal_form(gb, V({1, 2})) == V({0, 3}));
  CHECK(normal_form(gb, V({0, 3})) == V({0, 3}));
}

TEST_CASE("normal form is the order-minimal fiber point") {
  std::mt19937_64 rng(7151u);
  for (int round = 0; round < 8; ++round) {
    IntMatrix m = random_bounded_matrix(rng, 4);
    CAPTURE(m.to_text());
    TermOrder ord = random_order(rng, 4);
    GroebnerBasis gb = groebner(m, ord);

    std::uniform_int_distribution<int> coord(0, 4);
    for (int trial = 0; trial < 4; ++trial) {
      Vec x(4);
      for (auto& e : x) e = coord(rng);
      std::vector<Vec> fiber = fiber_enumerate(m, m.apply(x));
      Vec want = order_min(ord, fiber);
      for (const Vec& p : fiber) CHECK(normal_form(gb, p) == want);
    }
  }
}

TEST_CASE("every reduced basis sits inside the Graver basis") {
  std::mt19937_64 rng(424242u);
  for (const IntMatrix& m : {ab_matrix(1, 2), ab_matrix(2, 3)}) {
    GraverBasis g = graver(m);
    std::vector<Vec> sym = g.symmetric();
    for (int round = 0; round < 15; ++round) {
      TermOrder ord = random_order(rng, m.cols());
      GroebnerBasis gb = groebner(m, ord);
      CHECK(!gb.elements.empty());
      for (const Vec& z : gb.elements) {
        CAPTURE(to_string(z));
        CHECK(std::find(sym.begin(), sym.end(), z) != sym.end());
      }
    }
  }
}

TEST_CASE("reduced basis elements are fiber edges") {
  std::mt19937_64 rng(99u);
  IntMatrix m = ab_matrix(1, 2);
  for (int round = 0; round < 5; ++round) {
    TermOrder ord = random_order(rng, 4);
    GroebnerBasis gb = groebner(m, ord);
    for (const Vec& z : gb.elements) {
      CAPTURE(to_string(z));
      CHECK(ugb_member(m, z));
    }
  }
}

TEST_CASE("the reduced basis does not depend on seed order") {
  IntMatrix m = ab_matrix(2, 3);
  GraverBasis g = graver(m);
  TermOrder ord = TermOrder::degrevlex_order(4);

  GroebnerBasis a = groebner_from_graver(g, ord);
  GraverBasis shuffled = g;
  std::mt19937_64 rng(5u);
  std::shuffle(shuffled.elements.begin(), shuffled.elements.end(), rng);
  GroebnerBasis b = groebner_from_graver(shuffled, ord);
  CHECK(a.elements == b.elements);

  GroebnerBasis c = groebner(m, ord);
  CHECK(a.elements == c.elements);
}

TEST_CASE("reduced basis has disjoint lead and tail supports") {
  IntMatrix m = transportation_matrix(3, 3);
  TermOrder ord = TermOrder::lex_order(9);
  GroebnerBasis gb = groebner(m, ord);
  CHECK(!gb.elements.empty());
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    const Vec lead = pos_part(gb.elements[i]);
    for (std::size_t j = 0; j < gb.elements.size(); ++j) {
      if (i == j) continue;
      // no other lead divides this element's lead or tail monomial
      const Vec lj = pos_part(gb.elements[j]);
      CHECK_FALSE(leq(lj, lead));
      CHECK_FALSE(leq(lj, neg_part(gb.elements[i])));
    }
  }
}

TEST_CASE("infinite fibers are rejected") {
  IntMatrix m = IntMatrix::from_rows({V({1, -1})}, 2);
  CHECK_THROWS_AS(groebner(m, TermOrder::lex_order(2)), gk_error);
}

TEST_CASE("normal form validates its input") {
  IntMatrix m = IntMatrix::from_rows({V({1, 1})}, 2);
  GroebnerBasis gb = groebner(m, TermOrder::lex_order(2));
  CHECK_THROWS_AS(normal_form(gb, V({1, -1})), gk_error);  // negative entry
  CHECK_THROWS_AS(normal_form(gb, V({1})), gk_error);      // wrong length
}

TEST_CASE("non-canonical rational costs keep the order total") {
  // mpq equality assumes canonical operands; a cost row holding values like
  // 4/2 once drove the completion loop into a cycle on a matrix with two
  // equal columns.  The order must stay antisymmetric and the basis must
  // match the one computed from the reduced cost row.
  IntMatrix m{2, 4};
  const long second[4] = {0, 0, 2, 3};
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = 1;
    m.at(1, j) = second[j];
  }

  TermOrder rough;
  rough.n = 4;
  rough.cost = {Rat(4, 2), Rat(2), Rat(10), Rat(8, 2)};  // 4/2, 8/2 left unreduced
  rough.tie = TieBreak::lex;
  rough.perm = {2, 3, 1, 0};
  rough.validate();

  TermOrder clean = rough;
  for (Rat& e : clean.cost) e.canonicalize();

  // the equal-cost columns give tie monomials whose verdict must flip sign
  Vec e1 = V({1, 0, 0, 0}), e2 = V({0, 1, 0, 0});
  CHECK(rough.compare(e1, e2) == -rough.compare(e2, e1));
  CHECK(rough.compare(e1, e1) == 0);
  CHECK(rough.compare(e1, e2) == clean.compare(e1, e2));

  GroebnerBasis got = groebner(m, rough);
  GroebnerBasis want = groebner(m, clean);
  CHECK(got.elements == want.elements);
  CHECK(got.elements.size() == 2);
}
