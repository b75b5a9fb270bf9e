#pragma once

#include <iosfwd>
#include <string>

#include "vec.hpp"

namespace gk {

// Dense integer matrix with exact entries.  Text form is the conventional
// lattice-tool format: a header line "rows cols", then one whitespace-
// separated row per line, newline-terminated.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) fail(errc::invalid_argument, "negative matrix dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;
  void set_row(int r, const Vec& v);

  Vec apply(const Vec& x) const;  // A * x, x of length cols()
  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& b) const;

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, int cols);
  static IntMatrix from_cols(const std::vector<Vec>& cols, int rows);

  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  std::string to_text() const;
  // Parses the text form.  `what` names the input in diagnostics (file name
  // or "<string>"); errors carry line/column positions.
  static IntMatrix parse(const std::string& text, const std::string& what = "<string>");
  static IntMatrix read_file(const std::string& path);
  void write_file(const std::string& path) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Single-row convenience wrappers used for cost/rhs/vector files.
Vec parse_vector_file(const std::string& path, const std::string& what = "");
std::string vector_to_text(const Vec& v);

}  // namespace gk
