#include "abfamily.hpp"

#include "families.hpp"
#include "hnf.hpp"
#include "util.hpp"

#include <algorithm>

namespace gk {

ABInstance make_ab(const Int& a, const Int& b) {
  if (a < 1 || b < 1) fail(errc::invalid_argument, "ab family: parameters must be >= 1");
  ABInstance inst;
  inst.a_raw = a;
  inst.b_raw = b;
  Int g = gcd(a, b);
  inst.a = a / g;
  inst.b = b / g;
  inst.matrix = ab_matrix(a, b);
  inst.normalized = ab_matrix(inst.a, inst.b);
  return inst;
}

namespace {

Vec ab_v(const ABInstance& inst) { return {-inst.b, inst.a + inst.b, Int(0), -inst.a}; }
Vec ab_h() { return {Int(1), Int(-1), Int(-1), Int(1)}; }

int small_int(const Int& x, const char* what) {
  if (!x.fits_sint_p()) fail(errc::cap_exceeded, what);
  return int(x.get_si());
}

}  // namespace

GraverBasis ab_graver_closed_form(const ABInstance& inst) {
  const int s = small_int(inst.a + inst.b, "ab family: a+b too large for closed-form expansion");
  Vec v = ab_v(inst), h = ab_h();
  GraverBasis gb;
  gb.matrix = inst.normalized;
  for (int k = 0; k <= s; ++k) {
    Vec x(4);
    for (int j = 0; j < 4; ++j) x[j] = v[j] + k * h[j];
    gb.elements.push_back(canonical_sign(x));
  }
  gb.elements.push_back(canonical_sign(h));
  std::sort(gb.elements.begin(), gb.elements.end(), norm_lex_less);
  return gb;
}

Int ab_expected_g(const ABInstance& inst) { return 2 * (inst.a + inst.b); }

ABTriple ab_ugb_triple(const ABInstance& inst) {
  const Int &a = inst.a, &b = inst.b;
  ABTriple t;
  t.u = {
      Vec{b - 1, -a - b + 1, Int(1), a - 1},
      Vec{-b, a + b, Int(0), -a},
      Vec{a, Int(0), -a - b, b},
  };
  t.cert = {
      {Rat(0), Rat(0), Rat(a - 1), Rat(-1)},
      {Rat(0), Rat(0), Rat(1), Rat(0)},
      {Rat(0), Rat(1), Rat(0), Rat(0)},
  };
  return t;
}

Relation ab_relation(const ABInstance& inst) {
  ABTriple t = ab_ugb_triple(inst);
  Relation rel;
  rel.generators = t.u;
  rel.lambda = {inst.a + inst.b, inst.a + inst.b - 1, Int(1)};
  return rel;
}

std::vector<Vec> ab_face_chain(const ABInstance& inst) {
  const Int &a = inst.a, &b = inst.b;
  if (a > b) fail(errc::invalid_argument, "ab family: face chain requires a <= b");
  const int limit = small_int(a, "ab family: parameter too large for the chain");
  std::vector<Vec> chain;
  for (int s = 0; s < limit; ++s) chain.push_back(Vec{b - a + s, a - 1 - s, a - s, Int(s)});
  return chain;
}

ABKernelReport ab_kernel_report(const ABInstance& inst) {
  const int s = small_int(inst.a + inst.b, "ab family: a+b too large for closed-form expansion");
  Vec v = ab_v(inst), h = ab_h();

  ABKernelReport rep;
  std::vector<Vec> cols;
  for (int k = 0; k <= s; ++k) {
    Vec x(4);
    for (int j = 0; j < 4; ++j) x[j] = v[j] + k * h[j];
    cols.push_back(std::move(x));
  }
  cols.push_back(h);
  rep.g_matrix = IntMatrix::from_cols(cols, 4);
  rep.shift_matrix = c_shift_matrix(s);

  IntMatrix m = IntMatrix::from_cols({v, h}, 4);
  rep.factorization_ok = (rep.g_matrix == m.mul(rep.shift_matrix));
  rep.kernels_equal =
      lattice_equal(kernel_lattice_basis(rep.g_matrix), kernel_lattice_basis(rep.shift_matrix));
  return rep;
}

}  // namespace gk
