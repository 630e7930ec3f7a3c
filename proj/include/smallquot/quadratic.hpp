#pragma once

// Exact arithmetic in Q(√d): a + b√d with rational a, b.

#include "smallquot/numeric.hpp"

#include <string>

namespace smallquot {

class QuadraticElement {
 public:
  QuadraticElement() = default;
  QuadraticElement(int a) : a_(a) {}  // NOLINT: integer literals in matrix code
  QuadraticElement(Rational a, Rational b = 0, long d = 5);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  QuadraticElement& operator+=(const QuadraticElement& o);
  QuadraticElement& operator-=(const QuadraticElement& o);
  QuadraticElement& operator*=(const QuadraticElement& o);
  friend QuadraticElement operator+(QuadraticElement x, const QuadraticElement& y) { return x += y; }
  friend QuadraticElement operator-(QuadraticElement x, const QuadraticElement& y) { return x -= y; }
  friend QuadraticElement operator*(QuadraticElement x, const QuadraticElement& y) { return x *= y; }
  friend QuadraticElement operator-(const QuadraticElement& x) { return {-x.a_, -x.b_, x.d_}; }
  friend bool operator==(const QuadraticElement& x, const QuadraticElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }

  int sign() const;
  double to_double() const;
  std::string to_string() const;

 private:
  long common_d(const QuadraticElement& o) const;

  Rational a_ = 0;
  Rational b_ = 0;
  long d_ = 5;
};

inline bool operator<(const QuadraticElement& x, const QuadraticElement& y) { return (x - y).sign() < 0; }

}  // namespace smallquot

namespace Eigen {
template <>
struct NumTraits<smallquot::QuadraticElement> : GenericNumTraits<smallquot::QuadraticElement> {
  typedef smallquot::QuadraticElement Real;
  typedef smallquot::QuadraticElement NonInteger;
  typedef smallquot::QuadraticElement Nested;
  typedef smallquot::QuadraticElement Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
};
}  // namespace Eigen
