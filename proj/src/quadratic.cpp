#include "smallquot/quadratic.hpp"

#include <cmath>
#include <sstream>

namespace smallquot {

QuadraticElement::QuadraticElement(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 2) throw Error(Errc::precondition, "radicand must be a square-free integer >= 2");
  for (long p = 2; p * p <= d_; ++p)
    if (d_ % (p * p) == 0) throw Error(Errc::precondition, "radicand must be square-free");
}

long QuadraticElement::common_d(const QuadraticElement& o) const {
  if (b_ != 0 && o.b_ != 0 && d_ != o.d_) throw Error(Errc::precondition, "mixing different quadratic fields");
  return b_ != 0 ? d_ : o.d_;
}

QuadraticElement& QuadraticElement::operator+=(const QuadraticElement& o) {
  d_ = common_d(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticElement& QuadraticElement::operator-=(const QuadraticElement& o) {
  d_ = common_d(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticElement& QuadraticElement::operator*=(const QuadraticElement& o) {
  d_ = common_d(o);
  const Rational a = a_ * o.a_ + b_ * o.b_ * d_;
  b_ = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  return *this;
}

int QuadraticElement::sign() const {
  const int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  const Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double QuadraticElement::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
}

std::string QuadraticElement::to_string() const {
  std::ostringstream out;
  if (b_ == 0) {
    out << a_;
    return out.str();
  }
  if (a_ != 0) out << a_ << (b_ > 0 ? " + " : " - ");
  else if (b_ < 0) out << '-';
  const Rational mag = abs(b_);
  if (mag != 1) out << mag << '*';
  out << "sqrt(" << d_ << ')';
  return out.str();
}

}  // namespace smallquot
