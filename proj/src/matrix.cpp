#include "matrix.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gk {

Vec IntMatrix::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec IntMatrix::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void IntMatrix::set_row(int r, const Vec& v) {
  if (int(v.size()) != cols_) fail(errc::invalid_argument, "row length mismatch");
  for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Vec IntMatrix::apply(const Vec& x) const {
  if (int(x.size()) != cols_) fail(errc::invalid_argument, "matrix-vector size mismatch");
  Vec y(rows_);
  for (int r = 0; r < rows_; ++r) {
    Int s = 0;
    for (int c = 0; c < cols_; ++c) s += at(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& b) const {
  if (cols_ != b.rows_) fail(errc::invalid_argument, "matrix product size mismatch");
  IntMatrix p(rows_, b.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Int& v = at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < b.cols_; ++c) p.at(r, c) += v * b.at(k, c);
    }
  return p;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, int cols) {
  IntMatrix m(int(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) m.set_row(int(r), rows[r]);
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<Vec>& cols, int rows) {
  IntMatrix m(rows, int(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    if (int(cols[c].size()) != rows) fail(errc::invalid_argument, "column length mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, int(c)) = cols[c][r];
  }
  return m;
}

std::string IntMatrix::to_text() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << at(r, c);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

// Tokenizer that tracks line/column for diagnostics.
struct Cursor {
  const std::string& s;
  const std::string& what;
  size_t i = 0;
  int line = 1, col = 1;

  void advance() {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  void skip_space() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) advance();
  }

  [[noreturn]] void die(const std::string& msg) const {
    std::ostringstream os;
    os << what << ": line " << line << ", column " << col << ": " << msg;
    fail(errc::parse_error, os.str());
  }

  Int next_int(const char* ctx) {
    skip_space();
    if (i >= s.size()) die(std::string("unexpected end of input, expected ") + ctx);
    size_t start = i;
    int at_line = line, at_col = col;
    if (s[i] == '-' || s[i] == '+') advance();
    size_t digits_from = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) advance();
    if (i == digits_from) {
      line = at_line;
      col = at_col;
      die(std::string("expected integer for ") + ctx);
    }
    return Int(s.substr(start, i - start));
  }

  bool at_end() {
    skip_space();
    return i >= s.size();
  }
};

long to_small(const Int& v, Cursor& cur, const char* ctx) {
  if (!v.fits_slong_p()) cur.die(std::string(ctx) + " out of range");
  return v.get_si();
}

}  // namespace

IntMatrix IntMatrix::parse(const std::string& text, const std::string& what) {
  Cursor cur{text, what};
  long rows = to_small(cur.next_int("row count"), cur, "row count");
  long cols = to_small(cur.next_int("column count"), cur, "column count");
  if (rows < 0 || cols < 0) cur.die("matrix dimensions must be nonnegative");
  if (rows > 1'000'000 || cols > 1'000'000 || rows * cols > 100'000'000)
    cur.die("matrix dimensions implausibly large");
  IntMatrix m{int(rows), int(cols)};
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m.at(int(r), int(c)) = cur.next_int("matrix entry");
  if (!cur.at_end()) cur.die("trailing content after matrix entries");
  return m;
}

IntMatrix IntMatrix::read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, path + ": cannot open for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str(), path);
}

void IntMatrix::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, path + ": cannot open for writing");
  out << to_text();
  if (!out) fail(errc::parse_error, path + ": write failed");
}

Vec parse_vector_file(const std::string& path, const std::string& what) {
  IntMatrix m = IntMatrix::read_file(path);
  if (m.rows() != 1)
    fail(errc::parse_error, (what.empty() ? path : what) + ": expected a single-row matrix (1 n)");
  return m.row(0);
}

std::string vector_to_text(const Vec& v) {
  return IntMatrix::from_rows({v}, int(v.size())).to_text();
}

}  // namespace gk
