#include "complexity.hpp"

#include "families.hpp"
#include "fiber.hpp"
#include "hnf.hpp"

#include <algorithm>

namespace gk {

ComplexityReport graver_complexity(const IntMatrix& a, const Caps& caps) {
  ComplexityReport rep;
  rep.matrix = a;
  GraverBasis g1 = graver(a, caps);
  rep.graver_pairs = g1.pair_count();
  rep.derived = IntMatrix::from_cols(g1.elements, a.cols());
  rep.g_value = 0;
  if (rep.graver_pairs == 0) return rep;

  GraverBasis g2 = graver(rep.derived, caps);
  rep.derived_pairs = g2.pair_count();
  if (g2.elements.empty()) return rep;

  rep.g_value = g2.max_norm1();
  for (const Vec& z : g2.elements)  // sorted by (norm, lex): first hit is canonical
    if (norm1(z) == rep.g_value) {
      rep.witness = z;
      break;
    }
  return rep;
}

LowerBoundReport groebner_complexity_lower_bound(const IntMatrix& a,
                                                 const std::vector<Relation>& relations,
                                                 const Caps& caps) {
  if (relations.empty()) fail(errc::invalid_argument, "lower bound: no relations given");
  LowerBoundReport rep;
  rep.bound = 0;
  for (const Relation& rel : relations) {
    if (!relation_sums_to_zero(rel))
      fail(errc::invalid_argument, "lower bound: relation does not sum to zero");
    for (const Vec& g : rel.generators)
      if (!ugb_member(a, g, nullptr, caps))
        fail(errc::invalid_argument, "lower bound: a generator fails the edge test");
    if (!relation_minimal(rel).minimal)
      fail(errc::invalid_argument, "lower bound: relation is not minimal");
    Int type = 0;
    for (const Int& l : rel.lambda) type += l;
    rep.types.push_back(type);
    rep.bound = std::max(rep.bound, type);
  }
  return rep;
}

PartitionIdentity ppi_from_kernel(const Vec& x, int n) {
  if (n < 1 || int(x.size()) != n + 1)
    fail(errc::invalid_argument, "partition identity: vector length must be n+1");
  const IntMatrix an = a_n_matrix(n);
  if (!is_zero(an.apply(x)))
    fail(errc::invalid_argument, "partition identity: vector is not in the kernel");
  if (x[n] < 0)
    fail(errc::invalid_argument, "partition identity: unit count must be nonnegative");

  PartitionIdentity id;
  id.ones = x[n];
  for (int t = 0; t < n; ++t) {
    for (Int r = 0; r < x[t]; ++r) id.a_parts.push_back(Int(t + 1));
    for (Int r = 0; r < -x[t]; ++r) id.b_parts.push_back(Int(t + 1));
  }

  // Primitive iff conf-minimal: no y in ker with 0 != y != x and y conf x.
  // Enumerate the (sign-fixed) divisors of x directly; x is small.
  Vec y(x.size(), Int(0));
  bool reducible = false;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (reducible) return;
    if (i == x.size()) {
      if (!is_zero(y) && y != x && is_zero(an.apply(y))) reducible = true;
      return;
    }
    Int lim = abs(x[i]);
    for (Int v = 0; v <= lim && !reducible; ++v) {
      y[i] = x[i] < 0 ? Int(-v) : v;
      self(self, i + 1);
    }
    y[i] = 0;
  };
  dfs(dfs, 0);
  id.primitive = !reducible;
  return id;
}

Vec ppi_to_kernel(const PartitionIdentity& id, int n) {
  if (id.a_parts.size() != id.b_parts.size())
    fail(errc::invalid_argument, "partition identity: sides must have equal length");
  if (id.ones < 0) fail(errc::invalid_argument, "partition identity: negative unit count");
  Vec x(std::size_t(n) + 1, Int(0));
  for (const Int& p : id.a_parts) {
    if (p < 1 || p > n) fail(errc::invalid_argument, "partition identity: part out of range");
    x[std::size_t(p.get_si()) - 1] += 1;
  }
  for (const Int& p : id.b_parts) {
    if (p < 1 || p > n) fail(errc::invalid_argument, "partition identity: part out of range");
    x[std::size_t(p.get_si()) - 1] -= 1;
  }
  x[n] = id.ones;
  if (!is_zero(a_n_matrix(n).apply(x)))
    fail(errc::invalid_argument, "partition identity: sides do not balance");
  return x;
}

PpiBoundReport ppi_verify_bound(int n, const Caps& caps) {
  if (n < 2) fail(errc::invalid_argument, "partition identity: n must be >= 2");
  PpiBoundReport rep;
  rep.n = n;
  GraverBasis gb = graver(a_n_matrix(n), caps);
  rep.pairs = gb.pair_count();
  rep.max_norm = gb.max_norm1();
  rep.norm_matches = (rep.max_norm == 2 * (n - 1));

  Vec w(std::size_t(n) + 1, Int(0));
  w[0] = 1;
  w[n - 2] += -(n - 1);  // e_{n-1}; for n = 2 this folds onto e_1
  w[n - 1] += n - 2;
  Vec wc = canonical_sign(w);
  rep.witness_present =
      !is_zero(wc) &&
      std::find(gb.elements.begin(), gb.elements.end(), wc) != gb.elements.end();

  rep.delta_bound_holds = true;
  for (const Vec& z : gb.elements) {
    Vec x = z[n] >= 0 ? z : neg(z);
    PartitionIdentity id = ppi_from_kernel(x, n);
    const std::size_t k = id.a_parts.size();

    Int dpos = 0, dneg = 0;
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < k; ++i) {
      Int d = id.a_parts[i] - id.b_parts[i];
      if (d > 0) {
        has_pos = true;
        dpos = std::max(dpos, d);
      } else if (d < 0) {
        has_neg = true;
        dneg = std::max(dneg, Int(-d));
      }
    }
    if (has_pos && has_neg) {
      ++rep.delta_checked;
      Int gap = dpos + dneg;
      if (!(Int(k) + id.ones <= gap && gap <= n - 1)) rep.delta_bound_holds = false;
    } else {
      ++rep.delta_skipped;
    }
    rep.identities.push_back(std::move(id));
  }
  return rep;
}

ShiftKernelReport verify_2c(int c, const Caps& caps) {
  if (c < 1) fail(errc::invalid_argument, "shift kernel: c must be >= 1");
  ShiftKernelReport rep;
  rep.c = c;
  IntMatrix s = c_shift_matrix(c);
  rep.kernels_equal =
      lattice_equal(kernel_lattice_basis(s), kernel_lattice_basis(a_n_matrix(c + 1)));
  GraverBasis gb = graver(s, caps);
  rep.max_norm = gb.max_norm1();
  rep.norm_matches = (rep.max_norm == 2 * c);
  return rep;
}

}  // namespace gk
