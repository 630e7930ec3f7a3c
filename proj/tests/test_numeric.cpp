#include "smallquot/numeric.hpp"
#include "smallquot/polynomial.hpp"
#include "smallquot/quadratic.hpp"
#include "smallquot/sturm.hpp"

#include <doctest.h>

using namespace smallquot;

TEST_CASE("matrix helpers") {
  const IntMatrix m = int_matrix({{2, 1}, {1, 2}});
  CHECK(is_square(m));
  CHECK(is_symmetric(m));
  CHECK_FALSE(has_negative_entry(m));
  CHECK(max_entry(m) == 2);
  CHECK(to_string(m) == "[[2,1],[1,2]]");
  CHECK(to_string(int_matrix({{1, 2, 3}})) == "[[1,2,3]]");
  CHECK(is_zero(zero_matrix(2, 3)));
  CHECK(equal(identity(2) * 2 + int_matrix({{0, 1}, {1, 0}}), m));
  CHECK(lex_less(int_matrix({{0, 1}}), int_matrix({{1, 0}})));
  CHECK(lex_less(int_matrix({{9}}), int_matrix({{0, 0}})));
  CHECK_FALSE(lex_less(m, m));
  CHECK(has_negative_entry(int_matrix({{0, -1}})));
}

TEST_CASE("permutations and direct sums") {
  const IntMatrix m = int_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(equal(permute_symmetric(m, {2, 0, 1}), int_matrix({{9, 7, 8}, {3, 1, 2}, {6, 4, 5}})));
  const IntMatrix d = block_diagonal({int_matrix({{2}}), int_matrix({{2, 1}, {1, 2}})});
  CHECK(equal(d, int_matrix({{2, 0, 0}, {0, 2, 1}, {0, 1, 2}})));
}

TEST_CASE("big integers do not overflow") {
  IntMatrix m = int_matrix({{3, 1}, {1, 3}});
  IntMatrix p = identity(2);
  for (int i = 0; i < 60; ++i) p = p * m;
  CHECK(p(0, 0) > BigInt(1) << 100);
  CHECK(to_string(p).find('e') == std::string::npos);
}

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial p = int_polynomial({1, -3, 1});
  CHECK(p.degree() == 2);
  CHECK(to_string(p) == "x^2 - 3x + 1");
  CHECK(to_string(IntPolynomial{}) == "0");
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(to_string(-p) == "-x^2 + 3x - 1");
  CHECK(p * IntPolynomial::x() == int_polynomial({0, 1, -3, 1}));
  CHECK(p - p == IntPolynomial{});
  CHECK(derivative(p) == int_polynomial({-3, 2}));
  CHECK(compose(p, int_polynomial({1, 1})) == int_polynomial({-1, -1, 1}));
  CHECK(p.evaluate(BigInt(3)) == 1);
  CHECK(p.evaluate(2.0) == doctest::Approx(-1.0));
}

TEST_CASE("division and gcd") {
  const RatPolynomial a = to_rational(int_polynomial({-1, 0, 1}));
  const RatPolynomial b = to_rational(int_polynomial({-1, 1}));
  auto [q, r] = divmod(a, b);
  CHECK(q == to_rational(int_polynomial({1, 1})));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(a, RatPolynomial{}), Error);

  const IntPolynomial f = int_polynomial({-2, 1}) * int_polynomial({-1, 1}) * int_polynomial({-1, 1});
  CHECK(gcd(f, derivative(f)) == int_polynomial({-1, 1}));
  CHECK(squarefree_part(f) == int_polynomial({2, -3, 1}));
  CHECK(divides(int_polynomial({-2, 1}), f));
  CHECK_FALSE(divides(int_polynomial({-3, 1}), f));
  CHECK(exact_quotient(f, int_polynomial({-2, 1})) == int_polynomial({1, -2, 1}));
  CHECK_THROWS_AS(exact_quotient(f, int_polynomial({-3, 1})), Error);
  CHECK(content(int_polynomial({4, -6, 2})) == 2);
  CHECK(primitive_part(int_polynomial({-4, 6, -2})) == int_polynomial({2, -3, 1}));
  CHECK(clear_denominators(RatPolynomial{Rational(1, 2), Rational(1, 3)}) == int_polynomial({3, 2}));
}

TEST_CASE("sturm sequences count distinct real roots") {
  // (x-1)^2 (x-3) (x^2+1)
  const IntPolynomial p = int_polynomial({-1, 1}) * int_polynomial({-1, 1}) * int_polynomial({-3, 1}) *
                          int_polynomial({1, 0, 1});
  const SturmSequence s(p);
  CHECK(s.count_real_roots() == 2);
  CHECK(s.count_roots(Rational(0), Rational(1)) == 1);
  CHECK(s.count_roots(Rational(1), Rational(3)) == 1);
  CHECK(s.count_below(Rational(1)) == 0);
  CHECK(s.count_at_least(Rational(3)) == 1);
  CHECK(all_roots_in(p, Rational(1), Rational(4)));
  CHECK_FALSE(all_roots_in(p, Rational(1), Rational(3)));
  CHECK(sign_at(p, Rational(2)) < 0);
  CHECK(sign_at(p, Rational(1)) == 0);
}

TEST_CASE("largest root isolation") {
  const IntPolynomial p = int_polynomial({1, -3, 1});  // (3 + sqrt 5) / 2
  const double expected = (3 + std::sqrt(5.0)) / 2;
  auto [a, b] = isolate_max_root(p, Rational(1, 1000000));
  CHECK(a < Rational(expected));
  CHECK(b >= Rational(expected) - Rational(1, 1000000));
  CHECK(max_root(p) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(Rational(std::abs(expected)) < root_bound(p));
  CHECK(compare_max_roots(p, int_polynomial({-3, 1})) < 0);
  CHECK(compare_max_roots(p, p * int_polynomial({1, 1})) == 0);
  CHECK_THROWS_AS(isolate_max_root(int_polynomial({1, 0, 1}), Rational(1, 10)), Error);
}

TEST_CASE("exact arithmetic in Q(sqrt 5)") {
  const QuadraticElement phi(Rational(1, 2), Rational(1, 2));
  CHECK(phi * phi == phi + QuadraticElement(1));
  CHECK(phi.sign() > 0);
  CHECK((QuadraticElement(2) - phi * phi).sign() < 0);
  CHECK(phi.to_double() == doctest::Approx((1 + std::sqrt(5.0)) / 2));
  CHECK(QuadraticElement(Rational(-1, 2), Rational(-1, 2)).to_string() == "-1/2 - 1/2*sqrt(5)");
  CHECK(QuadraticElement(3).to_string() == "3");
  CHECK_THROWS_AS(QuadraticElement(0, 1, 5) + QuadraticElement(0, 1, 2), Error);
}
