#include "order.hpp"

#include <numeric>

namespace gk {

TermOrder TermOrder::lex_order(int n) {
  TermOrder o;
  o.n = n;
  o.tie = TieBreak::lex;
  return o;
}

TermOrder TermOrder::degrevlex_order(int n) {
  TermOrder o;
  o.n = n;
  o.tie = TieBreak::degrevlex;
  return o;
}

void TermOrder::validate() const {
  if (n <= 0) fail(errc::invalid_argument, "order: dimension must be positive");
  if (!cost.empty() && int(cost.size()) != n)
    fail(errc::invalid_argument, "order: cost row length mismatch");
  if (!perm.empty()) {
    if (int(perm.size()) != n) fail(errc::invalid_argument, "order: permutation length mismatch");
    std::vector<char> seen(n, 0);
    for (int p : perm) {
      if (p < 0 || p >= n || seen[p])
        fail(errc::invalid_argument, "order: not a permutation of 0..n-1");
      seen[p] = 1;
    }
  }
}

int TermOrder::compare(const Vec& u, const Vec& v) const {
  if (int(u.size()) != n || int(v.size()) != n)
    fail(errc::invalid_argument, "order: vector length mismatch");
  if (!cost.empty()) {
    // cmp (not ==) so the verdict stays exact even when a caller filled the
    // cost row with non-canonical mpq values; an inconsistent verdict here
    // would destroy the totality the completion loop's termination rests on.
    int c = cmp(dot(cost, u), dot(cost, v));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  auto var = [&](int i) { return perm.empty() ? i : perm[i]; };
  if (tie == TieBreak::lex) {
    for (int i = 0; i < n; ++i) {
      int t = var(i);
      if (u[t] != v[t]) return u[t] < v[t] ? -1 : 1;
    }
    return 0;
  }
  // degrevlex: higher total degree wins; on equal degree the monomial with
  // the smaller exponent at the least significant differing variable wins.
  Int du = std::accumulate(u.begin(), u.end(), Int(0));
  Int dv = std::accumulate(v.begin(), v.end(), Int(0));
  if (du != dv) return du < dv ? -1 : 1;
  for (int i = n - 1; i >= 0; --i) {
    int t = var(i);
    if (u[t] != v[t]) return u[t] < v[t] ? 1 : -1;
  }
  return 0;
}

bool TermOrder::plus_is_lead(const Vec& z) const {
  int c = compare(pos_part(z), neg_part(z));
  if (c == 0) fail(errc::invalid_argument, "order: cannot orient the zero vector");
  return c > 0;
}

Vec TermOrder::oriented(const Vec& z) const { return plus_is_lead(z) ? z : neg(z); }

}  // namespace gk
