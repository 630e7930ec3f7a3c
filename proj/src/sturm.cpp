#include "smallquot/sturm.hpp"

namespace smallquot {

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, abs(c));
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  if (p.leading() < 0) c = -c;
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) out.push_back(a / c);
  return IntPolynomial(std::move(out));
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return RatPolynomial(std::move(out));
}

IntPolynomial clear_denominators(const RatPolynomial& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) {
    const BigInt d = denominator(c);
    l = l / gcd(l, d) * d;
  }
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(numerator(c) * (l / denominator(c)));
  IntPolynomial q(std::move(out));
  const BigInt g = content(q);
  if (g > 1) {
    std::vector<BigInt> scaled;
    for (const auto& c : q.coeffs()) scaled.push_back(c / g);
    q = IntPolynomial(std::move(scaled));
  }
  return q;
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw Error(Errc::internal, "inexact polynomial division");
  std::vector<BigInt> out;
  for (const auto& c : q.coeffs()) {
    if (denominator(c) != 1) throw Error(Errc::internal, "polynomial quotient leaves Z[x]");
    out.push_back(numerator(c));
  }
  return IntPolynomial(std::move(out));
}

bool divides(const IntPolynomial& d, const IntPolynomial& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(to_rational(p), to_rational(d)).second.is_zero();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  RatPolynomial x = to_rational(a), y = to_rational(b);
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(clear_denominators(x));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) return primitive_part(p);
  return primitive_part(exact_quotient(p, gcd(p, derivative(p))));
}

IntPolynomial int_polynomial(std::initializer_list<long> ascending) {
  std::vector<BigInt> out;
  for (long c : ascending) out.emplace_back(c);
  return IntPolynomial(std::move(out));
}

int sign_at(const IntPolynomial& p, const Rational& x) {
  const BigInt num = numerator(x), den = denominator(x);
  BigInt acc = 0, den_pow = 1;
  // Horner on the homogenized form: sum c_i num^i den^(d-i).
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return acc.sign();
}

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::precondition, "Sturm sequence of the zero polynomial");
  seq_.push_back(squarefree_part(p));
  if (seq_.front().degree() < 1) return;
  seq_.push_back(primitive_part(derivative(seq_.front())));
  while (seq_.back().degree() > 0) {
    const auto& a = seq_[seq_.size() - 2];
    const auto& b = seq_.back();
    RatPolynomial r = divmod(to_rational(a), to_rational(b)).second;
    if (r.is_zero()) break;
    seq_.push_back(clear_denominators(-r));
  }
}

namespace {
int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}
}  // namespace

int SturmSequence::sign_changes(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& q : seq_) signs.push_back(sign_at(q, x));
  return count_changes(signs);
}

int SturmSequence::sign_changes_pos_inf() const {
  std::vector<int> signs;
  for (const auto& q : seq_) signs.push_back(q.leading().sign());
  return count_changes(signs);
}

int SturmSequence::sign_changes_neg_inf() const {
  std::vector<int> signs;
  for (const auto& q : seq_) signs.push_back(q.degree() % 2 ? -q.leading().sign() : q.leading().sign());
  return count_changes(signs);
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  return sign_changes(a) - sign_changes(b);
}

int SturmSequence::count_real_roots() const { return sign_changes_neg_inf() - sign_changes_pos_inf(); }

int SturmSequence::count_below(const Rational& lo) const {
  return sign_changes_neg_inf() - sign_changes(lo) - (sign_at(base(), lo) == 0 ? 1 : 0);
}

int SturmSequence::count_at_least(const Rational& hi) const {
  return sign_changes(hi) - sign_changes_pos_inf() + (sign_at(base(), hi) == 0 ? 1 : 0);
}

bool all_roots_in(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) return true;
  SturmSequence s(p);
  return s.count_below(lo) == 0 && s.count_at_least(hi) == 0;
}

Rational root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational best = 0;
  const Rational lead = abs(Rational(p.leading()));
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = abs(Rational(p.coeff(static_cast<std::size_t>(i)))) / lead;
    if (r > best) best = r;
  }
  return best + 1;
}

namespace {

std::pair<Rational, Rational> isolate_with(const SturmSequence& s, const Rational& width) {
  if (s.count_real_roots() == 0) throw Error(Errc::precondition, "polynomial has no real roots");
  const Rational bound = root_bound(s.base());
  Rational a = -bound, b = bound;
  int inside = s.count_roots(a, b);
  while (inside > 1 || b - a > width) {
    const Rational mid = (a + b) / 2;
    const int upper = s.count_roots(mid, b);
    if (upper >= 1) {
      a = mid;
      inside = upper;
    } else {
      b = mid;
    }
  }
  return {a, b};
}

bool has_root_in(const IntPolynomial& g, const std::pair<Rational, Rational>& iv) {
  if (g.degree() < 1) return false;
  return SturmSequence(g).count_roots(iv.first, iv.second) > 0;
}

}  // namespace

std::pair<Rational, Rational> isolate_max_root(const IntPolynomial& p, const Rational& width) {
  if (width <= 0) throw Error(Errc::precondition, "isolation width must be positive");
  return isolate_with(SturmSequence(p), width);
}

int compare_max_roots(const IntPolynomial& p, const IntPolynomial& q) {
  SturmSequence sp(p), sq(q);
  Rational width(1);
  auto ip = isolate_with(sp, width);
  auto iq = isolate_with(sq, width);
  const IntPolynomial g = gcd(sp.base(), sq.base());
  if (has_root_in(g, ip) && has_root_in(g, iq)) return 0;
  for (;;) {
    if (ip.second <= iq.first) return -1;
    if (iq.second <= ip.first) return 1;
    width /= 1024;
    ip = isolate_with(sp, width);
    iq = isolate_with(sq, width);
  }
}

double max_root(const IntPolynomial& p) {
  const auto iv = isolate_max_root(p, Rational(BigInt(1), BigInt(1) << 60));
  return Rational((iv.first + iv.second) / 2).convert_to<double>();
}

}  // namespace smallquot
