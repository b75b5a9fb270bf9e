#pragma once

#include "matrix.hpp"

namespace gk {

// Canonical form of the lattice spanned by the rows of M: the row-style
// Hermite normal form with positive pivots, entries above each pivot reduced
// into [0, pivot), zero rows dropped.  Two generating sets span the same
// lattice iff their canonical forms are identical, so lattice equality is a
// plain comparison.
IntMatrix hnf_rows(const IntMatrix& m);

// Basis of ker_Z(A) = { z : A z = 0 }, returned in canonical (HNF) form,
// one generator per row.  Empty matrix (0 x n) when A has full column rank.
IntMatrix kernel_lattice_basis(const IntMatrix& a);

bool lattice_equal(const IntMatrix& gens_a, const IntMatrix& gens_b);

int rank(const IntMatrix& a);

// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& a);

// True when every nonzero r x r minor of A (r = rank A) has the same
// absolute value.  Exhaustive over row/column index subsets; intended for
// small matrices.
bool is_unimodular(const IntMatrix& a);

}  // namespace gk
