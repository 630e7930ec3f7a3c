#pragma once

// Exact real-root counting for integer polynomials.

#include "smallquot/polynomial.hpp"

#include <utility>
#include <vector>

namespace smallquot {

// Sign (-1, 0, 1) of p at a rational point, without leaving Z.
int sign_at(const IntPolynomial& p, const Rational& x);

class SturmSequence {
 public:
  // Built on the squarefree part of p, so counts are of distinct roots.
  explicit SturmSequence(const IntPolynomial& p);

  int sign_changes(const Rational& x) const;
  int sign_changes_neg_inf() const;
  int sign_changes_pos_inf() const;

  // Distinct real roots in (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  int count_real_roots() const;
  int count_below(const Rational& lo) const;      // roots < lo
  int count_at_least(const Rational& hi) const;   // roots >= hi
  const IntPolynomial& base() const { return seq_.front(); }

 private:
  std::vector<IntPolynomial> seq_;
};

// Every real root r satisfies lo <= r < hi.
bool all_roots_in(const IntPolynomial& p, const Rational& lo, const Rational& hi);

// Strict bound on the absolute value of every complex root.
Rational root_bound(const IntPolynomial& p);

// Interval (a, b] containing the largest real root and no other root, of
// width at most `width`. Throws precondition if p has no real roots.
std::pair<Rational, Rational> isolate_max_root(const IntPolynomial& p, const Rational& width);

// -1, 0, 1 as the largest real root of p is below, equal to, above that of q.
int compare_max_roots(const IntPolynomial& p, const IntPolynomial& q);

double max_root(const IntPolynomial& p);

}  // namespace smallquot
