#pragma once

#include "graver.hpp"
#include "lawrence.hpp"
#include "matrix.hpp"

#include <cstddef>
#include <vector>

namespace gk {

// Graver complexity g(A): write the Graver basis of A as the columns of a
// matrix G (one representative per +- pair) and take the largest 1-norm in
// the Graver basis of G.  This equals the largest type of any Graver element
// over all higher liftings of A.
struct ComplexityReport {
  IntMatrix matrix;
  std::size_t graver_pairs = 0;   // pairs in G(A)
  IntMatrix derived;              // the matrix G
  std::size_t derived_pairs = 0;  // pairs in G(G)
  Int g_value;                    // max 1-norm over G(G); 0 when G(G) is empty
  Vec witness;                    // first max-norm element in (norm, lex) order
};

ComplexityReport graver_complexity(const IntMatrix& a, const Caps& caps = {});

// Lower bound for the Groebner complexity from minimal relations whose
// generators all pass the edge test against A: each such relation yields a
// reduced-basis element of type |lambda|_1 in the corresponding lifting, so
// the bound is the largest |lambda|_1.  Every hypothesis is checked; a
// violated one raises invalid_argument.
struct LowerBoundReport {
  std::vector<Int> types;  // |lambda|_1 per relation
  Int bound;               // their maximum
};

LowerBoundReport groebner_complexity_lower_bound(const IntMatrix& a,
                                                 const std::vector<Relation>& relations,
                                                 const Caps& caps = {});

// --- Partition identities ------------------------------------------------
//
// Kernel elements x of the 2 x (n+1) matrix (1 ... 1 0; 1 2 ... n 1)
// correspond to identities  a_1 + ... + a_k + 1 + ... + 1  =  b_1 + ... + b_k
// with parts in {1..n}, equally many a- and b-parts, l >= 0 extra units on
// the left, and {a_i} disjoint from {b_i} as multisets:
//   x_t  = (number of a-parts equal to t) - (number of b-parts equal to t),
//   x_{n+1} = l.
// The identity is primitive when no proper sub-identity exists, which is
// exactly conf-minimality of x; then |x|_1 = 2k + l.
struct PartitionIdentity {
  std::vector<Int> a_parts;  // ascending
  std::vector<Int> b_parts;  // ascending
  Int ones;                  // l
  bool primitive = false;
};

// Requires x in ker(A_n) with x_{n+1} >= 0.
PartitionIdentity ppi_from_kernel(const Vec& x, int n);
Vec ppi_to_kernel(const PartitionIdentity& id, int n);

// Checks the norm bound 2(n-1) on the Graver basis of A_n together with the
// tight witness e_1 - (n-1) e_{n-1} + (n-2) e_n, and the gap bound
// k + l <= D+ + D- <= n-1 where, after sorting both part lists ascending,
// d_i = a_i - b_i, D+ = max positive d_i and D- = max (-d_i) over negative
// d_i.  Elements whose d_i are single-signed fall outside the gap bound's
// hypothesis and are counted in delta_skipped instead.
struct PpiBoundReport {
  int n = 0;
  std::size_t pairs = 0;
  Int max_norm;
  bool norm_matches = false;      // max_norm == 2(n-1)
  bool witness_present = false;   // the tight witness is a Graver element
  std::size_t delta_checked = 0;
  std::size_t delta_skipped = 0;
  bool delta_bound_holds = false;
  std::vector<PartitionIdentity> identities;  // one per pair
};

PpiBoundReport ppi_verify_bound(int n, const Caps& caps = {});

// The 2 x (c+2) matrix S_c = (1 ... 1 0; 0 1 ... c 1) has the same integer
// kernel as A_{c+1} (add row one to row two), so its Graver basis has
// maximum 1-norm exactly 2c.
struct ShiftKernelReport {
  int c = 0;
  bool kernels_equal = false;
  Int max_norm;
  bool norm_matches = false;  // max_norm == 2c
};

ShiftKernelReport verify_2c(int c, const Caps& caps = {});

}  // namespace gk
