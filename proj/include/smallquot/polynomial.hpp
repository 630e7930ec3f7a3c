#pragma once

// Dense univariate polynomials over an arbitrary coefficient ring.
//
// Coefficients are stored in ascending degree with no trailing zeros, so the
// zero polynomial is the empty sequence and degree() == -1 for it.

#include "smallquot/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace smallquot {

template <typename T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial x() { return monomial(T(1), 1); }
  static Polynomial monomial(const T& c, int degree) {
    std::vector<T> v(static_cast<std::size_t>(degree) + 1, T(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const { return coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const T& c) {
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
  friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Horner evaluation at any scalar the coefficients convert into.
  template <typename U>
  U evaluate(const U& at) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + static_cast<U>(*it);
    return acc;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

template <typename T>
Polynomial<T> derivative(const Polynomial<T>& p) {
  if (p.degree() < 1) return {};
  std::vector<T> out;
  out.reserve(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out.push_back(p.coeffs()[i] * T(static_cast<long>(i)));
  return Polynomial<T>(std::move(out));
}

// p(q(x)).
template <typename T>
Polynomial<T> compose(const Polynomial<T>& p, const Polynomial<T>& q) {
  Polynomial<T> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * q + Polynomial<T>::constant(*it);
  return acc;
}

// Division with remainder; the coefficient ring must be a field.
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw Error(Errc::precondition, "polynomial division by zero");
  std::vector<T> rem = a.coeffs();
  if (a.degree() < b.degree()) return {Polynomial<T>{}, a};
  std::vector<T> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, T(0));
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const T q = rem[k + db] / b.leading();
    quot[k] = q;
    if (q == T(0)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

template <typename T>
std::string to_string(const Polynomial<T>& p, char var = 'x') {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    T c = p.coeff(static_cast<std::size_t>(d));
    if (c == T(0)) continue;
    const bool negative = c < T(0);
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (d == 0 || c != T(1)) out << c;
    if (d >= 1) out << var;
    if (d >= 2) out << '^' << d;
  }
  return out.str();
}

// Integer-polynomial helpers (implemented in sturm.cpp alongside the exact
// root machinery that needs them).

BigInt content(const IntPolynomial& p);
// p divided by its content, with the sign chosen so the leading coefficient is positive.
IntPolynomial primitive_part(const IntPolynomial& p);
RatPolynomial to_rational(const IntPolynomial& p);
// Positive rational multiple of p with coprime integer coefficients.
IntPolynomial clear_denominators(const RatPolynomial& p);
// a / b when b divides a in Z[x]; throws Errc::internal otherwise.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
bool divides(const IntPolynomial& d, const IntPolynomial& p);
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);
IntPolynomial int_polynomial(std::initializer_list<long> ascending);

}  // namespace smallquot
