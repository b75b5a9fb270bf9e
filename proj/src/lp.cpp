#include "lp.hpp"

namespace gk {

namespace {

// Dense simplex tableau over mpq.  Rows are constraint rows [A | b] kept in
// Gauss-Jordan form with respect to the current basis.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
    m_ = int(a.size());
    n_ = m_ ? int(a[0].size()) : (b.empty() ? 0 : -1);
    if (n_ < 0 || int(b.size()) != m_) fail(errc::invalid_argument, "lp: shape mismatch");
    for (const auto& row : a)
      if (int(row.size()) != n_) fail(errc::invalid_argument, "lp: ragged constraint matrix");
    rows_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      rows_[i] = a[i];
      rows_[i].push_back(b[i]);
      for (Rat& v : rows_[i]) v.canonicalize();  // exact ==/!= needs canonical mpq
      if (rows_[i][n_] < 0)
        for (Rat& v : rows_[i]) v = -v;
    }
    // One artificial variable per row forms the starting basis.
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      for (int k = 0; k < m_; ++k) rows_[i].insert(rows_[i].end() - 1, Rat(k == i ? 1 : 0));
      basis_[i] = n_ + i;
    }
    total_ = n_ + m_;
  }

  // Maximize the given objective (length total_) from the current basis.
  // Returns false on unbounded.
  bool optimize(const std::vector<Rat>& c) {
    for (;;) {
      // Reduced costs r_j = c_j - c_B . col_j; Bland: smallest improving j.
      int enter = -1;
      for (int j = 0; j < total_ && enter < 0; ++j) {
        if (is_basic(j)) continue;
        Rat r = c[j];
        for (int i = 0; i < m_; ++i)
          if (c[basis_[i]] != 0) r -= c[basis_[i]] * rows_[i][j];
        if (r > 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rat ratio = rows_[i][total_] / rows_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Rat objective(const std::vector<Rat>& c) const {
    Rat v = 0;
    for (int i = 0; i < m_; ++i)
      if (c[basis_[i]] != 0) v += c[basis_[i]] * rows_[i][total_];
    return v;
  }

  // Pivot artificial variables out of the basis, drop redundant rows, then
  // excise the artificial columns so phase II cannot touch them.
  void purge_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      int j = 0;
      while (j < n_ && rows_[i][j] == 0) ++j;
      if (j < n_) {
        pivot(i, j);
      } else {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
        --i;
      }
    }
    for (auto& row : rows_) row.erase(row.begin() + n_, row.begin() + total_);
    total_ = n_;
  }

  std::vector<Rat> solution() const {
    std::vector<Rat> x(n_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][total_];
    return x;
  }

  int n() const { return n_; }
  int total() const { return total_; }

 private:
  bool is_basic(int j) const {
    for (int b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(int pr, int pc) {
    Rat p = rows_[pr][pc];
    for (Rat& v : rows_[pr]) v /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == pr || rows_[i][pc] == 0) continue;
      Rat f = rows_[i][pc];
      for (int j = 0; j <= total_; ++j) rows_[i][j] -= f * rows_[pr][j];
    }
    basis_[pr] = pc;
  }

  int m_, n_, total_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution lp_solve(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                    const std::vector<Rat>& c_in) {
  Tableau t(a, b);
  std::vector<Rat> c = canonical_row(c_in);
  if (int(c.size()) != t.n()) fail(errc::invalid_argument, "lp: objective length mismatch");

  // Phase I: maximize -(sum of artificials); feasible iff optimum is 0.
  std::vector<Rat> phase1(t.total(), Rat(0));
  for (int j = t.n(); j < t.total(); ++j) phase1[j] = Rat(-1);
  t.optimize(phase1);  // bounded below by construction
  LpSolution sol;
  if (t.objective(phase1) != 0) {
    sol.status = LpStatus::infeasible;
    return sol;
  }
  t.purge_artificials();

  if (!t.optimize(c)) {
    sol.status = LpStatus::unbounded;
    return sol;
  }
  sol.status = LpStatus::optimal;
  sol.x = t.solution();
  sol.value = 0;
  for (int j = 0; j < t.n(); ++j) sol.value += c[j] * sol.x[j];
  return sol;
}

}  // namespace gk
