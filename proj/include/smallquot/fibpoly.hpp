#pragma once

// The disguised Fibonacci polynomials f_i, the Fibonacci polynomials g_i and
// the irreducible factors f̄_i with f_i = prod_{d | i} f̄_d.

#include "smallquot/numeric.hpp"
#include "smallquot/polynomial.hpp"

#include <utility>
#include <vector>

namespace smallquot {

IntPolynomial fib_f(int i);
IntPolynomial fib_g(int i);

// Odd i: (-1)^floor(i/2) f_i(-x^2) = g_i(x). Even i: (-1)^(i/2) f_i(-x^2) = x g_i(x).
bool check_fg_relation(int i);

// f̄_i by exact division of f_i through the f̄_d, d a proper divisor of i.
// Memoized; f̄_0 is taken to be 0 = f_0.
IntPolynomial fib_irreducible_factor(int i);

// The f̄_d for every divisor d of i >= 1, in increasing d.
std::vector<std::pair<int, IntPolynomial>> divisor_factorization(int i);

// p(M) with exact integer arithmetic.
IntMatrix eval_at_matrix(const IntPolynomial& p, const IntMatrix& m);

}  // namespace smallquot
