#include "smallquot/fibpoly.hpp"

#include <map>
#include <mutex>

namespace smallquot {

namespace {

void check_index(int i) {
  if (i < 0) throw Error(Errc::precondition, "polynomial index must be non-negative");
}

}  // namespace

IntPolynomial fib_f(int i) {
  check_index(i);
  IntPolynomial prev, cur = IntPolynomial::constant(1);
  if (i == 0) return prev;
  const IntPolynomial x = IntPolynomial::x();
  for (int k = 2; k <= i; ++k) {
    IntPolynomial next = (k % 2 ? cur : x * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial fib_g(int i) {
  check_index(i);
  IntPolynomial prev, cur = IntPolynomial::constant(1);
  if (i == 0) return prev;
  const IntPolynomial x = IntPolynomial::x();
  for (int k = 2; k <= i; ++k) {
    IntPolynomial next = x * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool check_fg_relation(int i) {
  if (i < 1) throw Error(Errc::precondition, "relation is stated for i >= 1");
  const IntPolynomial minus_x2 = int_polynomial({0, 0, -1});
  IntPolynomial lhs = compose(fib_f(i), minus_x2);
  if ((i / 2) % 2) lhs = -lhs;
  const IntPolynomial rhs = i % 2 ? fib_g(i) : IntPolynomial::x() * fib_g(i);
  return lhs == rhs;
}

IntPolynomial fib_irreducible_factor(int i) {
  check_index(i);
  if (i == 0) return {};
  static std::mutex lock;
  static std::map<int, IntPolynomial> memo;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = memo.find(i);
    if (it != memo.end()) return it->second;
  }
  IntPolynomial divisor_product = IntPolynomial::constant(1);
  for (int d = 1; d < i; ++d)
    if (i % d == 0) divisor_product *= fib_irreducible_factor(d);
  IntPolynomial result = exact_quotient(fib_f(i), divisor_product);
  std::lock_guard<std::mutex> guard(lock);
  return memo.emplace(i, std::move(result)).first->second;
}

std::vector<std::pair<int, IntPolynomial>> divisor_factorization(int i) {
  if (i < 1) throw Error(Errc::precondition, "factorization is stated for i >= 1");
  std::vector<std::pair<int, IntPolynomial>> out;
  for (int d = 1; d <= i; ++d)
    if (i % d == 0) out.emplace_back(d, fib_irreducible_factor(d));
  return out;
}

IntMatrix eval_at_matrix(const IntPolynomial& p, const IntMatrix& m) {
  if (!is_square(m)) throw Error(Errc::shape, "polynomial evaluation needs a square matrix");
  const Eigen::Index n = m.rows();
  IntMatrix acc = zero_matrix(n, n);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = (acc * m).eval();
    for (Eigen::Index k = 0; k < n; ++k) acc(k, k) += *it;
  }
  return acc;
}

}  // namespace smallquot
