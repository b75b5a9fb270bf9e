#include "fiber.hpp"

#include "lp.hpp"

#include <algorithm>
#include <numeric>

namespace gk {

bool fibers_finite(const IntMatrix& a) {
  // Infinite fibers exist iff {z >= 0 : Az = 0, sum z = 1} is feasible.
  const int n = a.cols();
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<Rat> r(n);
    for (int j = 0; j < n; ++j) r[j] = Rat(a.at(i, j));
    rows.push_back(std::move(r));
    rhs.push_back(Rat(0));
  }
  rows.push_back(std::vector<Rat>(n, Rat(1)));
  rhs.push_back(Rat(1));
  LpSolution s = lp_solve(rows, rhs, std::vector<Rat>(n, Rat(0)));
  return s.status == LpStatus::infeasible;
}

namespace {

// Rational upper bound for each coordinate over {x >= 0 : Ax = b}, or
// nullopt when the fiber region is empty.
bool coordinate_bounds(const IntMatrix& a, const Vec& b, std::vector<Int>& ub) {
  const int n = a.cols();
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<Rat> r(n);
    for (int j = 0; j < n; ++j) r[j] = Rat(a.at(i, j));
    rows.push_back(std::move(r));
    rhs.push_back(Rat(b[i]));
  }
  ub.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> c(n, Rat(0));
    c[j] = 1;
    LpSolution s = lp_solve(rows, rhs, c);
    if (s.status == LpStatus::infeasible) return false;
    if (s.status == LpStatus::unbounded)
      fail(errc::internal, "fiber: unbounded coordinate despite finiteness check");
    // floor of the rational optimum
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), s.value.get_num_mpz_t(), s.value.get_den_mpz_t());
    ub[j] = q;
  }
  return true;
}

}  // namespace

std::vector<Vec> fiber_enumerate(const IntMatrix& a, const Vec& b, const Caps& caps) {
  const int n = a.cols();
  const int d = a.rows();
  if (int(b.size()) != d) fail(errc::invalid_argument, "fiber: right-hand side length mismatch");
  if (!fibers_finite(a))
    fail(errc::unsupported, "fiber: ker(A) meets the nonnegative orthant; fibers may be infinite");

  std::vector<Vec> out;
  std::vector<Int> ub;
  if (!coordinate_bounds(a, b, ub)) return out;  // empty fiber

  // Assign the heaviest columns first; within the suffix keep, per row, the
  // reachable interval of the remaining partial sums for pruning.
  std::vector<int> ord(n);
  std::iota(ord.begin(), ord.end(), 0);
  std::vector<Int> colw(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < d; ++i) colw[j] += abs(a.at(i, j));
  std::stable_sort(ord.begin(), ord.end(), [&](int x, int y) { return colw[x] > colw[y]; });

  // lo/hi[k][i]: bounds of sum_{t >= k} a[i][ord[t]] * x_{ord[t]} given
  // 0 <= x_j <= ub_j.
  std::vector<std::vector<Int>> lo(n + 1, std::vector<Int>(d)), hi(n + 1, std::vector<Int>(d));
  for (int k = n - 1; k >= 0; --k)
    for (int i = 0; i < d; ++i) {
      Int c = a.at(i, ord[k]) * ub[ord[k]];
      lo[k][i] = lo[k + 1][i] + (c < 0 ? c : Int(0));
      hi[k][i] = hi[k + 1][i] + (c > 0 ? c : Int(0));
    }

  Vec x(n, Int(0));
  Vec residual = b;  // b - A * (assigned part)
  auto dfs = [&](auto&& self, int k) -> void {
    if (k == n) {
      for (int i = 0; i < d; ++i)
        if (residual[i] != 0) return;
      if (out.size() + 1 > caps.max_fiber)
        fail(errc::cap_exceeded, "fiber: point cap exceeded (--max-fiber)");
      out.push_back(x);
      return;
    }
    const int j = ord[k];
    for (Int v = 0; v <= ub[j]; ++v) {
      x[j] = v;
      if (v > 0)
        for (int i = 0; i < d; ++i) residual[i] -= a.at(i, j);
      bool ok = true;
      for (int i = 0; i < d; ++i)
        if (residual[i] < lo[k + 1][i] || residual[i] > hi[k + 1][i]) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1);
    }
    for (int i = 0; i < d; ++i) residual[i] += a.at(i, j) * ub[j];
    x[j] = 0;
  };
  dfs(dfs, 0);

  std::sort(out.begin(), out.end(), [](const Vec& p, const Vec& q) { return lex_cmp(p, q) < 0; });
  return out;
}

namespace {

void check_kernel_vector(const IntMatrix& a, const Vec& z) {
  if (int(z.size()) != a.cols()) fail(errc::invalid_argument, "edge test: vector length mismatch");
  if (is_zero(z)) fail(errc::invalid_argument, "edge test: zero vector");
  if (!is_zero(a.apply(z))) fail(errc::invalid_argument, "edge test: vector is not in ker(A)");
}

}  // namespace

bool verify_inequality_certificate(const std::vector<Vec>& fiber, const std::vector<Rat>& c_in,
                                   const Vec& t0, const Vec& t1) {
  if (t0 == t1) return false;
  std::vector<Rat> c = canonical_row(c_in);
  bool seen0 = false, seen1 = false;
  for (const Vec& y : fiber) {
    if (y == t0) seen0 = true;
    if (y == t1) seen1 = true;
  }
  if (!seen0 || !seen1) return false;
  Rat gamma = dot(c, t0);
  if (gamma != dot(c, t1)) return false;
  for (const Vec& y : fiber) {
    if (y == t0 || y == t1) continue;
    if (dot(c, y) <= gamma) return false;
  }
  return true;
}

EdgeDecision edge_test(const IntMatrix& a, const Vec& z, const Caps& caps) {
  check_kernel_vector(a, z);
  const int n = a.cols();
  Vec zp = pos_part(z), zm = neg_part(z);
  std::vector<Vec> fiber = fiber_enumerate(a, a.apply(zp), caps);

  EdgeDecision dec;
  dec.fiber_size = fiber.size();

  // Feasibility problem for the functional c (free, split c = p - m):
  //   c.(z+ - z-) = 0,  c.(y - z+) - s_y = 1  for other fiber points y.
  std::vector<Vec> others;
  for (const Vec& y : fiber)
    if (y != zp && y != zm) others.push_back(y);

  const int k = int(others.size());
  const int vars = 2 * n + k;  // p, m, surplus
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  {
    std::vector<Rat> r(vars, Rat(0));
    for (int j = 0; j < n; ++j) {
      r[j] = Rat(z[j]);
      r[n + j] = Rat(-z[j]);
    }
    rows.push_back(std::move(r));
    rhs.push_back(Rat(0));
  }
  for (int t = 0; t < k; ++t) {
    std::vector<Rat> r(vars, Rat(0));
    for (int j = 0; j < n; ++j) {
      Int d = others[t][j] - zp[j];
      r[j] = Rat(d);
      r[n + j] = Rat(-d);
    }
    r[2 * n + t] = Rat(-1);
    rows.push_back(std::move(r));
    rhs.push_back(Rat(1));
  }
  LpSolution s = lp_solve(rows, rhs, std::vector<Rat>(vars, Rat(0)));
  if (s.status != LpStatus::optimal) return dec;  // not an edge

  std::vector<Rat> c(n);
  for (int j = 0; j < n; ++j) c[j] = s.x[j] - s.x[n + j];
  if (!verify_inequality_certificate(fiber, c, zp, zm))
    fail(errc::internal, "edge test: solver certificate failed exact re-check");
  dec.is_edge = true;
  dec.certificate.value = dot(c, zp);
  dec.certificate.functional = std::move(c);
  dec.certificate.tight = {zp, zm};
  return dec;
}

bool ugb_member(const IntMatrix& a, const Vec& z, EdgeDecision* out, const Caps& caps) {
  EdgeDecision dec = edge_test(a, z, caps);
  if (out) *out = dec;
  return dec.is_edge;
}

bool verify_edge_certificate(const IntMatrix& a, const Vec& z, const std::vector<Rat>& c,
                             const Caps& caps) {
  check_kernel_vector(a, z);
  if (int(c.size()) != a.cols())
    fail(errc::invalid_argument, "edge test: certificate length mismatch");
  Vec zp = pos_part(z), zm = neg_part(z);
  std::vector<Vec> fiber = fiber_enumerate(a, a.apply(zp), caps);
  return verify_inequality_certificate(fiber, c, zp, zm);
}

}  // namespace gk
