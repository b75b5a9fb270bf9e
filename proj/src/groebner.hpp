#pragma once

#include "graver.hpp"
#include "matrix.hpp"
#include "order.hpp"
#include "util.hpp"
#include "vec.hpp"

#include <vector>

namespace gk {

struct GroebnerBasis {
  IntMatrix matrix;
  TermOrder order;
  std::vector<Vec> elements;  // reduced basis, oriented with the positive part leading

  Int max_norm1() const;
};

// Reduced Groebner basis of the lattice ideal of ker(A) under the given
// order.  Requires fibers_finite(A).  Seeds the completion with the full
// Graver basis, which generates the ideal with no saturation step.
GroebnerBasis groebner(const IntMatrix& a, const TermOrder& ord, const Caps& caps = {});

// Same, reusing an already-computed Graver basis of the same matrix.
GroebnerBasis groebner_from_graver(const GraverBasis& g, const TermOrder& ord,
                                   const Caps& caps = {});

// The unique order-minimal point of the fiber through x (x >= 0).
Vec normal_form(const GroebnerBasis& gb, const Vec& x);

}  // namespace gk
