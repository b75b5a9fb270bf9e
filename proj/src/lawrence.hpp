#pragma once

#include "matrix.hpp"
#include "util.hpp"
#include "vec.hpp"

#include <cstdint>
#include <vector>

namespace gk {

// Higher lifting of a d x n matrix A with N copies: the (n + dN) x (nN)
// matrix whose kernel consists of the N-tuples (x^1, ..., x^N) of kernel
// elements of A summing to zero,
//
//   [ I_n  I_n  ...  I_n ]
//   [  A                 ]
//   [       A            ]
//   [            ...     ]
//   [                 A  ]
struct LawrenceLift {
  IntMatrix base;
  int copies = 0;
  IntMatrix matrix;
};

LawrenceLift lawrence_lift(const IntMatrix& a, int copies);

// A vector in the lifted space, kept layer by layer.
struct LayeredVector {
  int width = 0;             // n, the base column count
  std::vector<Vec> layers;   // one entry per copy

  int type() const;          // number of nonzero layers
  Vec flat() const;          // concatenation, layer 1 first
  static LayeredVector from_flat(const Vec& x, int width);
};

// An integer combination sum_i lambda_i g_i = 0 with all lambda_i >= 1.
struct Relation {
  std::vector<Vec> generators;
  std::vector<Int> lambda;
};

// The value sum_i lambda_i g_i (validates shapes).
Vec relation_sum(const Relation& rel);
bool relation_sums_to_zero(const Relation& rel);

// A relation is minimal when no mu with 0 <= mu <= lambda other than 0 and
// lambda itself satisfies sum_i mu_i g_i = 0.  On failure, `mu` holds a
// violating vector.  Errors when the relation does not sum to zero.
struct RelationCheck {
  bool minimal = false;
  std::vector<Int> mu;
};
RelationCheck relation_minimal(const Relation& rel);

// The layered vector with lambda_i copies of g_i, in input order.  Requires
// a minimal relation (checked; errors otherwise).
LayeredVector build_witness(const Relation& rel);

// Concatenated functional for the lifted fiber: lambda_i copies of
// per_generator[i], giving a vector of length (sum_i lambda_i) * n.
std::vector<Rat> lemma_certificate(const Relation& rel,
                                   const std::vector<std::vector<Rat>>& per_generator);

// Minimize the functional c over {y >= 0 : lift.matrix y = b} by dynamic
// programming over the layers: per-layer fibers are enumerated and folded,
// keyed by the running layer sum (componentwise <= the target sum).  Counts
// all minimizers exactly and reconstructs up to list_cap of them, in a
// deterministic order.
struct FaceMinimizers {
  bool feasible = false;
  Rat min_value;
  Int count;                    // exact number of minimizers
  std::vector<Vec> minimizers;  // flat vectors, at most list_cap
};

FaceMinimizers lifted_face_minimizers(const IntMatrix& base, int copies, const Vec& b,
                                      const std::vector<Rat>& c, std::uint64_t list_cap,
                                      const Caps& caps = {});

}  // namespace gk
