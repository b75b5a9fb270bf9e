#pragma once

#include "matrix.hpp"

namespace gk {

// Constraint matrix of r x c transportation tables: one row per table row
// sum, one per table column sum; table entry (i,j) maps to column c*i + j.
IntMatrix transportation_matrix(int r, int c);

// The 2x4 family (1 1 1 1; 0 a b a+b).
IntMatrix ab_matrix(const Int& a, const Int& b);

// The 2x(n+1) matrix (1 1 ... 1 0; 1 2 ... n 1).
IntMatrix a_n_matrix(int n);

// The 2x(c+2) matrix (1 1 ... 1 0; 0 1 2 ... c 1).
IntMatrix c_shift_matrix(int c);

}  // namespace gk
