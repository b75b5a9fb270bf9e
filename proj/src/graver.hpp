#pragma once

#include "hnf.hpp"
#include "matrix.hpp"

namespace gk {

// Graver basis of A: the set of conf-divides-minimal nonzero elements of
// ker_Z(A).  Stored as one canonically signed representative per +- pair,
// sorted by (1-norm, lex); the full basis is the symmetric closure.
struct GraverBasis {
  IntMatrix matrix;
  std::vector<Vec> elements;

  std::vector<Vec> symmetric() const;
  Int max_norm1() const;
  size_t pair_count() const { return elements.size(); }
};

// Pottier-style completion: start from a lattice basis of ker_Z(A) and its
// negations, form sums of pairs, reduce to normal form by conformal
// subtraction, insert irreducible results, iterate to fixpoint, keep the
// conf-minimal survivors.  Deterministic; exact; throws cap_exceeded when a
// cap in `caps` is hit.
GraverBasis graver(const IntMatrix& a, const Caps& caps = {});

// Same completion, but seeded from an explicit generating set of a sublattice
// of ker_Z(A) instead of the full kernel basis.  Used internally and by tests.
GraverBasis graver_from_generators(const IntMatrix& a, const std::vector<Vec>& gens,
                                   const Caps& caps = {});

// Independent box oracle: enumerates every z in ker_Z(A) with |z|_inf <= box
// by direct search and keeps the conf-minimal nonzero ones.  Because a
// conf-minimal element inside the box is conf-minimal globally, the result
// equals { z in G(A) : |z|_inf <= box }.  Returns the symmetric set, sorted.
std::vector<Vec> orthant_hilbert_oracle(const IntMatrix& a, const Int& box,
                                        const Caps& caps = {});

// Certificate check that a candidate set is exactly a Graver basis:
//   1. the set is symmetric (closed under negation) and kernel-contained,
//   2. it generates ker_Z(A) as a lattice,
//   3. every pairwise sum g1+g2 is a sign-compatible nonnegative integer
//      combination of candidates (decided by exhaustive search; each
//      subtraction strictly decreases the 1-norm, so the search is bounded),
//   4. no candidate conf-divides another (minimality).
// On failure, `why` (when non-null) receives a human-readable reason and the
// offending vectors.
struct CertificateFailure {
  std::string reason;
  Vec witness_a, witness_b;
};
bool graver_certificate_check(const IntMatrix& a, const std::vector<Vec>& candidate,
                              CertificateFailure* why = nullptr);

}  // namespace gk
