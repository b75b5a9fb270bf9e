#include "families.hpp"

#include "util.hpp"

namespace gk {

IntMatrix transportation_matrix(int r, int c) {
  if (r < 1 || c < 1) fail(errc::invalid_argument, "transportation_matrix: sizes must be positive");
  IntMatrix m{r + c, r * c};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      m.at(i, c * i + j) = 1;          // row-sum constraint for table row i
      m.at(r + j, c * i + j) = 1;      // column-sum constraint for table column j
    }
  return m;
}

IntMatrix ab_matrix(const Int& a, const Int& b) {
  if (a < 1 || b < 1) fail(errc::invalid_argument, "ab_matrix: parameters must be >= 1");
  IntMatrix m{2, 4};
  m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(0, 2) = 1; m.at(0, 3) = 1;
  m.at(1, 0) = 0; m.at(1, 1) = a; m.at(1, 2) = b; m.at(1, 3) = a + b;
  return m;
}

IntMatrix a_n_matrix(int n) {
  if (n < 1) fail(errc::invalid_argument, "a_n_matrix: n must be >= 1");
  IntMatrix m{2, n + 1};
  for (int j = 0; j < n; ++j) {
    m.at(0, j) = 1;
    m.at(1, j) = j + 1;
  }
  m.at(0, n) = 0;
  m.at(1, n) = 1;
  return m;
}

IntMatrix c_shift_matrix(int c) {
  if (c < 1) fail(errc::invalid_argument, "c_shift_matrix: c must be >= 1");
  IntMatrix m{2, c + 2};
  for (int j = 0; j <= c; ++j) {
    m.at(0, j) = 1;
    m.at(1, j) = j;
  }
  m.at(0, c + 1) = 0;
  m.at(1, c + 1) = 1;
  return m;
}

}  // namespace gk
