#pragma once

#include "graver.hpp"
#include "lawrence.hpp"
#include "matrix.hpp"

#include <vector>

namespace gk {

// One member of the two-row family (1 1 1 1; 0 a b a+b).  Dividing the
// second row by gcd(a, b) leaves the kernel unchanged, so every kernel
// computation runs on the normalized (coprime) parameters; the instance
// keeps both.
struct ABInstance {
  Int a_raw, b_raw;
  Int a, b;             // normalized: a_raw/gcd, b_raw/gcd
  IntMatrix matrix;     // the raw matrix
  IntMatrix normalized; // the coprime-parameter matrix
};

ABInstance make_ab(const Int& a, const Int& b);

// Closed-form Graver basis: with v = (-b, a+b, 0, -a) and h = (1,-1,-1,1)
// (normalized parameters), the pairs +-{v + k h : 0 <= k <= a+b} and +-h,
// giving a+b+2 pairs.  Returned canonically signed and sorted like graver().
GraverBasis ab_graver_closed_form(const ABInstance& inst);

// Expected Graver complexity, 2(a + b) in normalized parameters.
Int ab_expected_g(const ABInstance& inst);

// The three distinguished kernel elements
//   u1 = (b-1, -a-b+1, 1, a-1),  u2 = (-b, a+b, 0, -a),  u3 = (a, 0, -a-b, b)
// together with inequality certificates for their fibers:
//   c1 = (0, 0, a-1, -1),  c2 = (0, 0, 1, 0),  c3 = (0, 1, 0, 0).
struct ABTriple {
  std::vector<Vec> u;
  std::vector<std::vector<Rat>> cert;
};
ABTriple ab_ugb_triple(const ABInstance& inst);

// The minimal relation (a+b) u1 + (a+b-1) u2 + 1 u3 = 0 over the triple.
Relation ab_relation(const ABInstance& inst);

// The fiber of u1+ contains the chain (b-a+s, a-1-s, a-s, s), s = 0..a-1,
// on which c1 takes the value a(a-1-s); the chain ends at u1+ itself.
std::vector<Vec> ab_face_chain(const ABInstance& inst);

// Structural kernel comparison: the matrix G whose columns are the closed
// form in the order v, v+h, ..., v+(a+b)h, h factors as M * S with
// M = [v h] and S the 2 x (a+b+2) matrix (1 ... 1 0; 0 1 ... a+b 1), and
// ker_Z(G) = ker_Z(S).
struct ABKernelReport {
  IntMatrix g_matrix;
  IntMatrix shift_matrix;
  bool factorization_ok = false;
  bool kernels_equal = false;
};
ABKernelReport ab_kernel_report(const ABInstance& inst);

}  // namespace gk
