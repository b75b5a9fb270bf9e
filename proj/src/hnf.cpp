#include "hnf.hpp"

namespace gk {

namespace {

// Working row view on a flat matrix copy.
struct RowOps {
  IntMatrix& m;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
  }

  void negate_row(int i) {
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
  }

  // row_i -= q * row_j
  void submul_row(int i, const Int& q, int j) {
    if (q == 0) return;
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) -= q * m.at(j, c);
  }

  // Replace rows i, j by the standard xgcd combination so that
  // m[i][c] = gcd and m[j][c] = 0.
  void gcd_combine(int i, int j, int c) {
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.at(i, c).get_mpz_t(),
               m.at(j, c).get_mpz_t());
    Int u = m.at(i, c) / g;  // exact
    Int v = m.at(j, c) / g;  // exact
    for (int k = 0; k < m.cols(); ++k) {
      Int ri = s * m.at(i, k) + t * m.at(j, k);
      Int rj = u * m.at(j, k) - v * m.at(i, k);
      m.at(i, k) = ri;
      m.at(j, k) = rj;
    }
  }
};

}  // namespace

IntMatrix hnf_rows(const IntMatrix& input) {
  IntMatrix m = input;
  RowOps ops{m};
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    ops.swap_rows(r, pivot);
    for (int i = r + 1; i < m.rows(); ++i)
      if (m.at(i, c) != 0) ops.gcd_combine(r, i, c);
    if (m.at(r, c) < 0) ops.negate_row(r);
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, c).get_mpz_t());
      ops.submul_row(i, q, r);
    }
    ++r;
  }
  // Drop the zero tail so the canonical form has exactly rank-many rows.
  IntMatrix h(r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < m.cols(); ++c) h.at(i, c) = m.at(i, c);
  return h;
}

IntMatrix kernel_lattice_basis(const IntMatrix& a) {
  const int n = a.cols();
  // Column-style elimination on a copy of A, mirrored on U (starts as I_n);
  // columns of U over the zeroed columns of A form a kernel basis.
  IntMatrix b = a;
  IntMatrix u = IntMatrix::identity(n);

  auto gcd_combine_cols = [&](int i, int j, int r) {
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b.at(r, i).get_mpz_t(),
               b.at(r, j).get_mpz_t());
    Int p = b.at(r, i) / g;
    Int q = b.at(r, j) / g;
    for (int k = 0; k < b.rows(); ++k) {
      Int ci = s * b.at(k, i) + t * b.at(k, j);
      Int cj = p * b.at(k, j) - q * b.at(k, i);
      b.at(k, i) = ci;
      b.at(k, j) = cj;
    }
    for (int k = 0; k < n; ++k) {
      Int ci = s * u.at(k, i) + t * u.at(k, j);
      Int cj = p * u.at(k, j) - q * u.at(k, i);
      u.at(k, i) = ci;
      u.at(k, j) = cj;
    }
  };

  int c = 0;
  for (int r = 0; r < a.rows() && c < n; ++r) {
    int pivot = -1;
    for (int j = c; j < n; ++j)
      if (b.at(r, j) != 0) {
        pivot = j;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != c) {
      for (int k = 0; k < b.rows(); ++k) std::swap(b.at(k, c), b.at(k, pivot));
      for (int k = 0; k < n; ++k) std::swap(u.at(k, c), u.at(k, pivot));
    }
    for (int j = c + 1; j < n; ++j)
      if (b.at(r, j) != 0) gcd_combine_cols(c, j, r);
    ++c;
  }

  std::vector<Vec> gens;
  for (int j = c; j < n; ++j) gens.push_back(u.col(j));
  return hnf_rows(IntMatrix::from_rows(gens, n));
}

bool lattice_equal(const IntMatrix& gens_a, const IntMatrix& gens_b) {
  if (gens_a.cols() != gens_b.cols()) return false;
  return hnf_rows(gens_a) == hnf_rows(gens_b);
}

int rank(const IntMatrix& a) {
  return hnf_rows(a).rows();
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(errc::invalid_argument, "determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int denom = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int c = k; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = t / denom;  // exact by Bareiss
      }
      m.at(i, k) = 0;
    }
    denom = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace {

// Enumerate k-subsets of {0..n-1} in lexicographic order.
bool next_subset(std::vector<int>& idx, int n) {
  int k = int(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_unimodular(const IntMatrix& a) {
  const int r = rank(a);
  if (r == 0) return true;
  std::vector<int> rows(r), cols(r);
  for (int i = 0; i < r; ++i) rows[i] = i;
  Int common = 0;
  do {
    std::vector<int> cs(r);
    for (int i = 0; i < r; ++i) cs[i] = i;
    do {
      IntMatrix sub(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub.at(i, j) = a.at(rows[i], cs[j]);
      Int d = abs(determinant(sub));
      if (d != 0) {
        if (common == 0)
          common = d;
        else if (d != common)
          return false;
      }
    } while (next_subset(cs, a.cols()));
  } while (next_subset(rows, a.rows()));
  return common != 0;
}

}  // namespace gk
