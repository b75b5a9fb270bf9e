// Higher liftings: matrix shape, layered vectors, zero-sum relations and
// their witnesses, and the layer dynamic program against brute force.

#include <doctest.h>

#include <algorithm>
#include <random>

#include "families.hpp"
#include "fiber.hpp"
#include "lawrence.hpp"

using namespace gk;

namespace {

Vec V(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("lifted matrix layout") {
  IntMatrix a = ab_matrix(1, 2);  // 2 x 4
  LawrenceLift lift = lawrence_lift(a, 3);
  CHECK(lift.copies == 3);
  CHECK(lift.matrix.rows() == 4 + 2 * 3);
  CHECK(lift.matrix.cols() == 4 * 3);

  // identity blocks across the top
  for (int copy = 0; copy < 3; ++copy)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(lift.matrix.at(i, copy * 4 + j) == (i == j ? 1 : 0));
  // block-diagonal copies of a below
  for (int copy = 0; copy < 3; ++copy)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) {
        CHECK(lift.matrix.at(4 + copy * 2 + i, copy * 4 + j) == a.at(i, j));
        if (copy > 0) CHECK(lift.matrix.at(4 + copy * 2 + i, j) == 0);
      }

  CHECK_THROWS_AS(lawrence_lift(a, 0), gk_error);
}

TEST_CASE("lifted kernel = zero-sum tuples of kernel elements") {
  IntMatrix a = IntMatrix::from_rows({V({1, 1})}, 2);
  LawrenceLift lift = lawrence_lift(a, 2);
  Vec z = V({1, -1});
  LayeredVector lv;
  lv.width = 2;
  lv.layers = {z, neg(z)};
  CHECK(is_zero(lift.matrix.apply(lv.flat())));
  // a tuple that does not sum to zero leaves the kernel
  LayeredVector bad;
  bad.width = 2;
  bad.layers = {z, z};
  CHECK_FALSE(is_zero(lift.matrix.apply(bad.flat())));
}

TEST_CASE("layered vectors round-trip and count their type") {
  Vec flat = V({1, -1, 0, 0, 0, 2});
  LayeredVector lv = LayeredVector::from_flat(flat, 2);
  CHECK(lv.layers.size() == 3);
  CHECK(lv.layers[0] == V({1, -1}));
  CHECK(lv.layers[1] == V({0, 0}));
  CHECK(lv.layers[2] == V({0, 2}));
  CHECK(lv.type() == 2);  // the zero layer does not count
  CHECK(lv.flat() == flat);
  CHECK_THROWS_AS(LayeredVector::from_flat(V({1, 2, 3}), 2), gk_error);
}

TEST_CASE("relation arithmetic and validation") {
  Vec g = V({1, -1});
  Relation rel{{g, neg(g)}, {Int(1), Int(1)}};
  CHECK(is_zero(relation_sum(rel)));
  CHECK(relation_sums_to_zero(rel));

  Relation off{{g, neg(g)}, {Int(2), Int(1)}};
  CHECK(relation_sum(off) == g);
  CHECK_FALSE(relation_sums_to_zero(off));

  Relation bad_lambda{{g}, {Int(0)}};
  CHECK_THROWS_AS(relation_sum(bad_lambda), gk_error);
  Relation bad_shape{{g, V({1, 2, 3})}, {Int(1), Int(1)}};
  CHECK_THROWS_AS(relation_sum(bad_shape), gk_error);
  Relation zero_gen{{V({0, 0})}, {Int(1)}};
  CHECK_THROWS_AS(relation_sum(zero_gen), gk_error);
}

TEST_CASE("relation minimality") {
  Vec g = V({1, -1});

  SUBCASE("a genuinely minimal relation") {
    Relation rel{{g, neg(g)}, {Int(1), Int(1)}};
    RelationCheck chk = relation_minimal(rel);
    CHECK(chk.minimal);
  }
  SUBCASE("a doubled relation is caught with its witness") {
    Relation rel{{g, neg(g)}, {Int(2), Int(2)}};
    RelationCheck chk = relation_minimal(rel);
    CHECK_FALSE(chk.minimal);
    REQUIRE(chk.mu.size() == 2);
    // the reported mu is a proper zero subrelation
    Relation sub{rel.generators, chk.mu};
    CHECK(relation_sums_to_zero(sub));
    CHECK(chk.mu != rel.lambda);
  }
  SUBCASE("scaled generators keep coprime multiplicities minimal") {
    Relation rel{{g, V({-2, 2})}, {Int(2), Int(1)}};
    CHECK(relation_minimal(rel).minimal);
  }
  SUBCASE("non-balancing relations are rejected") {
    Relation rel{{g, neg(g)}, {Int(2), Int(1)}};
    CHECK_THROWS_AS(relation_minimal(rel), gk_error);
  }
}

TEST_CASE("witness construction") {
  Vec g = V({1, -1});
  Relation rel{{g, V({-2, 2})}, {Int(2), Int(1)}};
  LayeredVector w = build_witness(rel);
  CHECK(w.width == 2);
  REQUIRE(w.layers.size() == 3);
  CHECK(w.layers[0] == g);
  CHECK(w.layers[1] == g);
  CHECK(w.layers[2] == V({-2, 2}));
  CHECK(w.type() == 3);

  Relation fat{{g, neg(g)}, {Int(2), Int(2)}};
  CHECK_THROWS_AS(build_witness(fat), gk_error);
}

TEST_CASE("certificate concatenation follows the multiplicities") {
  Relation rel{{V({1, -1}), V({-2, 2})}, {Int(2), Int(1)}};
  std::vector<std::vector<Rat>> per = {{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  std::vector<Rat> c = lemma_certificate(rel, per);
  std::vector<Rat> want = {Rat(1), Rat(2), Rat(1), Rat(2), Rat(3), Rat(4)};
  CHECK(c == want);
  std::vector<std::vector<Rat>> short_list = {{Rat(1), Rat(2)}};
  CHECK_THROWS_AS(lemma_certificate(rel, short_list), gk_error);
}

TEST_CASE("layer DP against brute-force enumeration") {
  std::mt19937_64 rng(60919u);
  IntMatrix base = IntMatrix::from_rows({V({1, 1, 2})}, 3);
  std::uniform_int_distribution<int> coord(0, 2), cnum(0, 5);

  int compared = 0;
  for (int round = 0; round < 12; ++round) {
    const int copies = 2 + (round % 2);
    Vec y(std::size_t(3) * copies);
    for (auto& e : y) e = coord(rng);
    LawrenceLift lift = lawrence_lift(base, copies);
    Vec b = lift.matrix.apply(y);
    std::vector<Rat> c(y.size());
    for (auto& e : c) {
      e = Rat(cnum(rng), 1 + (cnum(rng) % 3));
      e.canonicalize();
    }

    FaceMinimizers dp = lifted_face_minimizers(base, copies, b, c, 1000);
    std::vector<Vec> brute = fiber_enumerate(lift.matrix, b);
    REQUIRE(dp.feasible);  // b was built from a point
    REQUIRE(!brute.empty());

    Rat best = dot(c, brute[0]);
    for (const Vec& p : brute) best = std::min(best, dot(c, p));
    std::vector<Vec> argmin;
    for (const Vec& p : brute)
      if (dot(c, p) == best) argmin.push_back(p);

    CHECK(dp.min_value == best);
    CHECK(dp.count == Int(long(argmin.size())));
    std::vector<Vec> got = dp.minimizers;
    std::sort(got.begin(), got.end(), norm_lex_less);
    std::sort(argmin.begin(), argmin.end(), norm_lex_less);
    CHECK(got == argmin);
    ++compared;
  }
  CHECK(compared == 12);
}

TEST_CASE("layer DP detects infeasibility and honors the list cap") {
  IntMatrix base = IntMatrix::from_rows({V({1, 1, 2})}, 3);
  // t = (1,0,0) forces layer one to exhaust the budget; layers two and three
  // then cannot reach their right-hand sides
  Vec b = V({1, 0, 0, 1, 1, 1});
  FaceMinimizers dp = lifted_face_minimizers(base, 3, b, std::vector<Rat>(9, Rat(0)), 10);
  CHECK_FALSE(dp.feasible);

  // feasible instance with a zero functional: every fiber point minimizes
  LawrenceLift lift = lawrence_lift(base, 2);
  Vec y = V({1, 1, 0, 0, 1, 1});
  Vec b2 = lift.matrix.apply(y);
  FaceMinimizers all = lifted_face_minimizers(base, 2, b2, std::vector<Rat>(6, Rat(0)), 2);
  std::vector<Vec> brute = fiber_enumerate(lift.matrix, b2);
  CHECK(all.feasible);
  CHECK(all.min_value == 0);
  CHECK(all.count == Int(long(brute.size())));
  CHECK(all.minimizers.size() == std::min<std::size_t>(2, brute.size()));

  // determinism of the reconstruction
  FaceMinimizers again = lifted_face_minimizers(base, 2, b2, std::vector<Rat>(6, Rat(0)), 2);
  CHECK(again.minimizers == all.minimizers);
}

TEST_CASE("layer DP on a two-row base") {
  IntMatrix base = ab_matrix(1, 2);
  Vec h = V({1, -1, -1, 1});
  // witness of the relation h + (-h) = 0, type 2
  Relation rel{{h, neg(h)}, {Int(1), Int(1)}};
  LayeredVector w = build_witness(rel);
  Vec x = w.flat();
  LawrenceLift lift = lawrence_lift(base, 2);
  Vec b = lift.matrix.apply(pos_part(x));

  std::vector<std::vector<Rat>> per(2);
  for (int i = 0; i < 2; ++i) {
    per[i].assign(4, Rat(0));
    for (int j = 0; j < 4; ++j)
      if (rel.generators[i][j] == 0) per[i][j] = 1;
  }
  std::vector<Rat> c = lemma_certificate(rel, per);
  FaceMinimizers dp = lifted_face_minimizers(base, 2, b, c, 10);
  REQUIRE(dp.feasible);
  CHECK(dp.min_value == 0);

  // cross-check against brute force
  std::vector<Vec> brute = fiber_enumerate(lift.matrix, b);
  Rat best = dot(c, brute[0]);
  for (const Vec& p : brute) best = std::min(best, dot(c, p));
  std::size_t tight = 0;
  for (const Vec& p : brute)
    if (dot(c, p) == best) ++tight;
  CHECK(dp.count == Int(long(tight)));
  std::vector<Vec> got = dp.minimizers;
  std::sort(got.begin(), got.end(), norm_lex_less);
  bool has_pos = std::find(got.begin(), got.end(), pos_part(x)) != got.end();
  bool has_neg = std::find(got.begin(), got.end(), neg_part(x)) != got.end();
  CHECK(has_pos);
  CHECK(has_neg);
}
