#pragma once

#include <vector>

#include "util.hpp"

namespace gk {

// Lattice vectors are plain dense integer vectors.  The derived views a
// caller usually wants (positive/negative part, support, 1-norm) are free
// functions so the representation stays a single flat array.
using Vec = std::vector<Int>;

Vec pos_part(const Vec& z);   // componentwise max(z, 0)
Vec neg_part(const Vec& z);   // componentwise max(-z, 0); z == pos - neg
std::vector<int> support(const Vec& z);
Int norm1(const Vec& z);
Int norm_inf(const Vec& z);
bool is_zero(const Vec& z);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
Vec scale(const Int& c, const Vec& a);
Int dot(const Vec& a, const Vec& b);
Rat dot(const std::vector<Rat>& c, const Vec& a);

// Copy a rational row into canonical form.  mpq equality tests assume
// canonical operands, so every function that accepts rationals from a
// caller normalizes them on entry instead of trusting the construction.
inline std::vector<Rat> canonical_row(std::vector<Rat> r) {
  for (Rat& e : r) e.canonicalize();
  return r;
}

// Strict componentwise comparison helpers.
bool leq(const Vec& a, const Vec& b);       // a <= b componentwise
bool sign_compatible(const Vec& a, const Vec& b);  // a_i * b_i >= 0 for all i

// a conformally divides b: sign-compatible and |a_i| <= |b_i| everywhere.
// This is the partial order whose minimal nonzero kernel elements form the
// Graver basis.
bool conf_divides(const Vec& a, const Vec& b);

// -1/0/+1 lexicographic comparison.
int lex_cmp(const Vec& a, const Vec& b);

// Canonical sign: flip so the first nonzero coordinate is positive.
// Returns the (possibly negated) vector.
Vec canonical_sign(const Vec& z);

// Deterministic total order used when sorting vector lists for output:
// (1-norm, then lex).
bool norm_lex_less(const Vec& a, const Vec& b);

std::string to_string(const Vec& z);

}  // namespace gk
