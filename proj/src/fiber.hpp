#pragma once

#include "matrix.hpp"
#include "util.hpp"
#include "vec.hpp"

#include <cstddef>
#include <vector>

namespace gk {

// True when ker(A) meets the nonnegative orthant only in 0; equivalently,
// every set {x >= 0 : Ax = b} is finite.
bool fibers_finite(const IntMatrix& a);

// All nonnegative integer points x with Ax = b, sorted lexicographically.
// Requires fibers_finite(a); the point cap guards the enumeration.
std::vector<Vec> fiber_enumerate(const IntMatrix& a, const Vec& b, const Caps& caps = {});

// Witness that the segment [z+, z-] is an edge of the convex hull of the
// fiber through z+: a rational functional whose minimum over the fiber is
// `value`, attained exactly on the two points in `tight`.
struct EdgeCertificate {
  std::vector<Rat> functional;
  Rat value;
  std::vector<Vec> tight;  // the two minimizers, {z+, z-}
};

struct EdgeDecision {
  bool is_edge = false;
  EdgeCertificate certificate;  // meaningful only when is_edge
  std::size_t fiber_size = 0;
};

// Decide whether [z+, z-] is an edge of conv({x >= 0 : Ax = A z+}).
// z must be a nonzero element of ker(A).  A found certificate is re-verified
// against the enumerated fiber before being returned.
EdgeDecision edge_test(const IntMatrix& a, const Vec& z, const Caps& caps = {});

// True when z is a nonzero kernel element whose segment [z+, z-] passes
// edge_test; the decision (with certificate) is copied to *out when given.
bool ugb_member(const IntMatrix& a, const Vec& z, EdgeDecision* out = nullptr,
                const Caps& caps = {});

// Exact check that c attains its minimum over `fiber` exactly on the two
// distinct points t0 and t1 (with equal values there).  False whenever t0,
// t1 coincide, one of them lies outside the fiber, or any further fiber
// point ties the minimum.
bool verify_inequality_certificate(const std::vector<Vec>& fiber, const std::vector<Rat>& c,
                                   const Vec& t0, const Vec& t1);

// Convenience wrapper: enumerate the fiber of z+ and check c against it
// with tight set {z+, z-}.
bool verify_edge_certificate(const IntMatrix& a, const Vec& z, const std::vector<Rat>& c,
                             const Caps& caps = {});

}  // namespace gk
