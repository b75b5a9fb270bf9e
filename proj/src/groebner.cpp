#include "groebner.hpp"

#include "fiber.hpp"

#include <algorithm>
#include <deque>

namespace gk {

Int GroebnerBasis::max_norm1() const {
  Int m = 0;
  for (const Vec& v : elements) {
    Int n = norm1(v);
    if (n > m) m = n;
  }
  return m;
}

namespace {

// Completion works on binomials kept as explicit monomial pairs (lead,
// tail), both componentwise nonnegative.  Keeping the pair uncollapsed
// during reduction means every intermediate monomial stays inside the two
// finite fibers of the starting pair, which gives termination for every
// cost order, not just global ones.
struct Completion {
  const TermOrder& ord;
  const Caps& caps;
  std::vector<Vec> basis;  // oriented primitive vectors: positive part leads
  std::deque<std::pair<std::uint32_t, std::uint32_t>> pending;
  std::uint64_t pending_count = 0;

  Completion(const TermOrder& o, const Caps& c) : ord(o), caps(c) {}

  // One reduction pass: subtract some basis element's lead from the larger
  // monomial of the pair until that monomial has no divisor among the
  // leads.  Returns the collapsed vector (may be zero).
  Vec reduce_pair(Vec big, Vec small) {
    // invariant: ord.compare(big, small) >= 0
    for (;;) {
      if (big == small) return Vec(big.size(), Int(0));
      bool hit = false;
      for (const Vec& g : basis) {
        if (!leq(pos_part(g), big)) continue;
        big = sub(big, g);  // x^big - x^(big - g+ + g-), still >= 0
        hit = true;
        break;
      }
      if (!hit) return sub(big, small);
      if (ord.compare(big, small) < 0) std::swap(big, small);
    }
  }

  void insert(const Vec& v) {
    if (norm1(v) > caps.max_norm)
      fail(errc::cap_exceeded, "groebner: element 1-norm cap exceeded (--max-norm)");
    if (basis.size() + 1 > caps.max_elements)
      fail(errc::cap_exceeded, "groebner: element count cap exceeded (--max-elements)");
    std::uint32_t k = std::uint32_t(basis.size());
    basis.push_back(v);
    if (pending_count + k > caps.max_queue)
      fail(errc::cap_exceeded, "groebner: pending pair cap exceeded (--max-queue)");
    for (std::uint32_t i = 0; i < k; ++i) pending.emplace_back(i, k);
    pending_count += k;
  }

  void run(const std::vector<Vec>& seeds) {
    for (const Vec& s : seeds) {
      if (is_zero(s)) continue;
      Vec v = ord.oriented(s);
      Vec r = reduce_pair(pos_part(v), neg_part(v));
      if (!is_zero(r)) insert(ord.oriented(r));
    }
    while (!pending.empty()) {
      auto [i, j] = pending.front();
      pending.pop_front();
      --pending_count;
      // Disjoint lead supports never yield a new element.
      if (disjoint_supports(pos_part(basis[i]), pos_part(basis[j]))) continue;
      Vec s = sub(basis[i], basis[j]);
      if (is_zero(s)) continue;
      Vec v = ord.oriented(s);
      Vec r = reduce_pair(pos_part(v), neg_part(v));
      if (!is_zero(r)) insert(ord.oriented(r));
    }
  }

  static bool disjoint_supports(const Vec& u, const Vec& v) {
    for (std::size_t t = 0; t < u.size(); ++t)
      if (u[t] != 0 && v[t] != 0) return false;
    return true;
  }

  // Minimalize leads, then tail-reduce each survivor.
  std::vector<Vec> reduced() {
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!keep[i]) continue;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j || !keep[j]) continue;
        if (leq(pos_part(basis[j]), pos_part(basis[i])) && basis[i] != basis[j]) {
          keep[i] = 0;
          break;
        }
        if (basis[i] == basis[j] && j < i) {
          keep[i] = 0;
          break;
        }
      }
    }
    std::vector<Vec> mini;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (keep[i]) mini.push_back(basis[i]);

    std::vector<Vec> out;
    for (const Vec& g : mini) {
      Vec lead = pos_part(g);
      Vec tail = neg_part(g);
      // Point normal form of the tail over the minimal leads.
      bool hit = true;
      while (hit) {
        hit = false;
        for (const Vec& h : mini) {
          if (leq(pos_part(h), tail)) {
            tail = sub(tail, h);
            hit = true;
            break;
          }
        }
      }
      Vec v = sub(lead, tail);
      if (!disjoint_supports(lead, tail))
        fail(errc::internal, "groebner: reduced element with overlapping monomials");
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), norm_lex_less);
    return out;
  }
};

}  // namespace

GroebnerBasis groebner_from_graver(const GraverBasis& g, const TermOrder& ord, const Caps& caps) {
  ord.validate();
  if (ord.n != g.matrix.cols()) fail(errc::invalid_argument, "groebner: order dimension mismatch");
  if (!fibers_finite(g.matrix))
    fail(errc::unsupported,
         "groebner: ker(A) meets the nonnegative orthant; fibers are not finite");
  Completion comp(ord, caps);
  comp.run(g.elements);
  GroebnerBasis gb;
  gb.matrix = g.matrix;
  gb.order = ord;
  gb.elements = comp.reduced();
  return gb;
}

GroebnerBasis groebner(const IntMatrix& a, const TermOrder& ord, const Caps& caps) {
  return groebner_from_graver(graver(a, caps), ord, caps);
}

Vec normal_form(const GroebnerBasis& gb, const Vec& x) {
  if (int(x.size()) != gb.matrix.cols())
    fail(errc::invalid_argument, "normal form: vector length mismatch");
  for (const Int& v : x)
    if (v < 0) fail(errc::invalid_argument, "normal form: point must be nonnegative");
  Vec p = x;
  bool hit = true;
  while (hit) {
    hit = false;
    for (const Vec& g : gb.elements) {
      if (leq(pos_part(g), p)) {
        p = sub(p, g);
        hit = true;
        break;
      }
    }
  }
  return p;
}

}  // namespace gk
