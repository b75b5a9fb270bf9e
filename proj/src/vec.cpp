#include "vec.hpp"

#include <sstream>

namespace gk {

Vec pos_part(const Vec& z) {
  Vec r(z.size());
  for (size_t i = 0; i < z.size(); ++i)
    if (z[i] > 0) r[i] = z[i];
  return r;
}

Vec neg_part(const Vec& z) {
  Vec r(z.size());
  for (size_t i = 0; i < z.size(); ++i)
    if (z[i] < 0) r[i] = -z[i];
  return r;
}

std::vector<int> support(const Vec& z) {
  std::vector<int> s;
  for (size_t i = 0; i < z.size(); ++i)
    if (z[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

Int norm1(const Vec& z) {
  Int n = 0;
  for (const Int& v : z) n += abs(v);
  return n;
}

Int norm_inf(const Vec& z) {
  Int n = 0;
  for (const Int& v : z) {
    Int a = abs(v);
    if (a > n) n = a;
  }
  return n;
}

bool is_zero(const Vec& z) {
  for (const Int& v : z)
    if (v != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const std::vector<Rat>& c, const Vec& a) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += c[i] * Rat(a[i]);
  return s;
}

bool leq(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool sign_compatible(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) * sgn(b[i]) < 0) return false;
  return true;
}

bool conf_divides(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int sa = sgn(a[i]);
    if (sa == 0) continue;
    if (sa != sgn(b[i])) return false;
    if (mpz_cmpabs(a[i].get_mpz_t(), b[i].get_mpz_t()) > 0) return false;
  }
  return true;
}

int lex_cmp(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

Vec canonical_sign(const Vec& z) {
  for (const Int& v : z) {
    if (v > 0) return z;
    if (v < 0) return neg(z);
  }
  return z;
}

bool norm_lex_less(const Vec& a, const Vec& b) {
  Int na = norm1(a), nb = norm1(b);
  if (na != nb) return na < nb;
  return lex_cmp(a, b) < 0;
}

std::string to_string(const Vec& z) {
  std::ostringstream os;
  for (size_t i = 0; i < z.size(); ++i) {
    if (i) os << ' ';
    os << z[i];
  }
  return os.str();
}

}  // namespace gk
