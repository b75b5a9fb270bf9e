// The two-parameter family (1 1 1 1; 0 a b a+b): closed-form Graver basis,
// the distinguished kernel triple with its certificates, the minimal
// relation, the fiber chain, and the kernel factorization.

#include <doctest.h>

#include <algorithm>

#include "abfamily.hpp"
#include "families.hpp"
#include "fiber.hpp"
#include "graver.hpp"
#include "hnf.hpp"
#include "lawrence.hpp"

using namespace gk;

namespace {

Vec V(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("instances normalize by the gcd") {
  ABInstance plain = make_ab(2, 3);
  CHECK(plain.a == 2);
  CHECK(plain.b == 3);
  CHECK(plain.matrix == plain.normalized);

  ABInstance scaled = make_ab(2, 4);
  CHECK(scaled.a_raw == 2);
  CHECK(scaled.b_raw == 4);
  CHECK(scaled.a == 1);
  CHECK(scaled.b == 2);
  CHECK(scaled.matrix.row(1) == V({0, 2, 4, 6}));
  CHECK(scaled.normalized.row(1) == V({0, 1, 2, 3}));
  // same kernel either way
  CHECK(lattice_equal(kernel_lattice_basis(scaled.matrix),
                      kernel_lattice_basis(scaled.normalized)));

  CHECK_THROWS_AS(make_ab(0, 2), gk_error);
  CHECK_THROWS_AS(make_ab(3, -1), gk_error);
}

TEST_CASE("closed form matches the computed Graver basis") {
  for (auto [a, b] : {std::pair<long, long>{1, 2}, {2, 3}, {2, 4}}) {
    ABInstance inst = make_ab(a, b);
    CAPTURE(a);
    CAPTURE(b);
    GraverBasis computed = graver(inst.matrix);
    GraverBasis closed = ab_graver_closed_form(inst);
    CHECK(computed.elements == closed.elements);
    CHECK(Int(long(closed.pair_count())) == inst.a + inst.b + 2);
    CHECK(computed.max_norm1() == 2 * (inst.a + inst.b));
  }
}

TEST_CASE("the closed form is structurally (v + k h, h)") {
  ABInstance inst = make_ab(2, 3);
  GraverBasis closed = ab_graver_closed_form(inst);
  std::vector<Vec> sym = closed.symmetric();
  Vec v = V({-3, 5, 0, -2});
  Vec h = V({1, -1, -1, 1});
  CHECK(std::find(sym.begin(), sym.end(), h) != sym.end());
  for (long k = 0; k <= 5; ++k) {
    Vec g = add(v, scale(Int(k), h));
    CAPTURE(k);
    CHECK(std::find(sym.begin(), sym.end(), g) != sym.end());
  }
}

TEST_CASE("the distinguished triple and its certificates") {
  for (auto [a, b] : {std::pair<long, long>{1, 2}, {2, 3}, {3, 4}}) {
    ABInstance inst = make_ab(a, b);
    CAPTURE(a);
    CAPTURE(b);
    ABTriple t = ab_ugb_triple(inst);
    REQUIRE(t.u.size() == 3);
    REQUIRE(t.cert.size() == 3);

    // stated coordinates
    CHECK(t.u[0] == V({b - 1, -a - b + 1, 1, a - 1}));
    CHECK(t.u[1] == V({-b, a + b, 0, -a}));
    CHECK(t.u[2] == V({a, 0, -a - b, b}));

    for (std::size_t i = 0; i < 3; ++i) {
      CAPTURE(i);
      CHECK(is_zero(inst.normalized.apply(t.u[i])));
      EdgeDecision dec;
      CHECK(ugb_member(inst.normalized, t.u[i], &dec));
      CHECK(verify_edge_certificate(inst.normalized, t.u[i], t.cert[i]));
    }

    // a perturbed functional no longer certifies
    std::vector<Rat> bad = t.cert[1];
    bad[3] = Rat(-5);
    CHECK_FALSE(verify_edge_certificate(inst.normalized, t.u[1], bad));
  }
}

TEST_CASE("the relation is minimal and its witness has type 2(a+b)") {
  for (auto [a, b] : {std::pair<long, long>{1, 2}, {2, 3}}) {
    ABInstance inst = make_ab(a, b);
    CAPTURE(a);
    CAPTURE(b);
    Relation rel = ab_relation(inst);
    REQUIRE(rel.generators.size() == 3);
    CHECK(rel.lambda == std::vector<Int>{inst.a + inst.b, inst.a + inst.b - 1, Int(1)});
    CHECK(relation_sums_to_zero(rel));
    CHECK(relation_minimal(rel).minimal);

    LayeredVector w = build_witness(rel);
    CHECK(Int(w.type()) == 2 * (inst.a + inst.b));
    // the witness really lies in the kernel of the lifting
    LawrenceLift lift = lawrence_lift(inst.normalized, w.type());
    CHECK(is_zero(lift.matrix.apply(w.flat())));
  }
}

TEST_CASE("the fiber chain walks to u1+ with the stated values") {
  ABInstance inst = make_ab(2, 3);
  ABTriple t = ab_ugb_triple(inst);
  std::vector<Vec> chain = ab_face_chain(inst);
  REQUIRE(chain.size() == 2);  // s = 0..a-1
  Vec u1p = pos_part(t.u[0]);
  CHECK(chain.back() == u1p);

  Vec rhs = inst.normalized.apply(u1p);
  for (std::size_t s = 0; s < chain.size(); ++s) {
    CAPTURE(s);
    CHECK(chain[s] == V({3 - 2 + long(s), 2 - 1 - long(s), 2 - long(s), long(s)}));
    CHECK(inst.normalized.apply(chain[s]) == rhs);
    CHECK(dot(t.cert[0], chain[s]) == Rat(Int(2) * (Int(1) - Int(long(s)))));
  }
}

TEST_CASE("the chain requires a <= b") {
  ABInstance inst = make_ab(3, 2);
  CHECK_THROWS_AS(ab_face_chain(inst), gk_error);
}

TEST_CASE("kernel factorization through the shift matrix") {
  for (auto [a, b] : {std::pair<long, long>{1, 2}, {2, 3}, {1, 3}}) {
    ABInstance inst = make_ab(a, b);
    CAPTURE(a);
    CAPTURE(b);
    ABKernelReport rep = ab_kernel_report(inst);
    CHECK(rep.factorization_ok);
    CHECK(rep.kernels_equal);
    CHECK(rep.g_matrix.rows() == 4);
    CHECK(rep.g_matrix.cols() == a + b + 2);
    CHECK(rep.shift_matrix.rows() == 2);
    CHECK(rep.shift_matrix.cols() == a + b + 2);
    // shift matrix shape: (1 ... 1 0; 0 1 ... a+b 1)
    CHECK(rep.shift_matrix.at(0, 0) == 1);
    CHECK(rep.shift_matrix.at(0, a + b + 1) == 0);
    CHECK(rep.shift_matrix.at(1, 0) == 0);
    CHECK(rep.shift_matrix.at(1, a + b + 1) == 1);
  }
}
