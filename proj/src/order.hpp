#pragma once

#include "util.hpp"
#include "vec.hpp"

#include <string>
#include <vector>

namespace gk {

enum class TieBreak { lex, degrevlex };

// A monomial order on n variables: an optional rational cost row compared
// first, ties broken by lex or degrevlex over an optional variable priority
// permutation (perm[0] is the most significant variable).
struct TermOrder {
  int n = 0;
  std::vector<Rat> cost;  // empty or length n
  TieBreak tie = TieBreak::lex;
  std::vector<int> perm;  // empty (identity) or a permutation of 0..n-1

  static TermOrder lex_order(int n);
  static TermOrder degrevlex_order(int n);

  void validate() const;

  // Compare monomials x^u vs x^v (u, v componentwise >= 0): -1, 0, +1.
  int compare(const Vec& u, const Vec& v) const;

  // True when the positive part of z is the larger monomial.  Errors on a
  // tie, which cannot happen for nonzero z since z+ and z- are distinct.
  bool plus_is_lead(const Vec& z) const;

  // z or -z, whichever has its positive part leading.
  Vec oriented(const Vec& z) const;
};

}  // namespace gk
