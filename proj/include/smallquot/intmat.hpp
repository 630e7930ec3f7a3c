#pragma once

// Exact linear algebra over arbitrary-precision integer matrices.

#include "smallquot/numeric.hpp"
#include "smallquot/polynomial.hpp"

#include <Eigen/Dense>

#include <vector>

namespace smallquot {

enum class Side { left, right };

// left: X Xᵗ, right: Xᵗ X.
IntMatrix gram(const IntMatrix& x, Side side);

// Division-free Berkowitz algorithm. Returns det(xI - M) as ascending
// coefficients; works over any commutative ring scalar.
template <typename Scalar>
std::vector<Scalar> berkowitz(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw Error(Errc::shape, "characteristic polynomial of a non-square matrix");
  const Eigen::Index n = m.rows();
  // Descending coefficients of the leading principal r x r block.
  std::vector<Scalar> poly{Scalar(1)};
  for (Eigen::Index r = 0; r < n; ++r) {
    std::vector<Scalar> t;
    t.reserve(static_cast<std::size_t>(r) + 2);
    t.push_back(Scalar(1));
    t.push_back(-m(r, r));
    std::vector<Scalar> v(static_cast<std::size_t>(r));
    for (Eigen::Index i = 0; i < r; ++i) v[i] = m(i, r);
    for (Eigen::Index k = 0; k < r; ++k) {
      Scalar dot(0);
      for (Eigen::Index j = 0; j < r; ++j) dot += m(r, j) * v[j];
      t.push_back(-dot);
      if (k + 1 == r) break;
      std::vector<Scalar> next(static_cast<std::size_t>(r), Scalar(0));
      for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j) next[i] += m(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<Scalar> out(poly.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j)
        if (i - j < t.size()) out[i] += t[i - j] * poly[j];
    poly = std::move(out);
  }
  return {poly.rbegin(), poly.rend()};
}

IntPolynomial charpoly(const IntMatrix& m);
IntPolynomial minpoly_symmetric(const IntMatrix& m);

// Strong connectivity of the digraph i -> j whenever m(i, j) > 0.
bool is_irreducible_nonneg(const IntMatrix& m);
bool is_irreducible_nonneg(const Eigen::MatrixXd& m);

// All eigenvalues of the symmetric matrix m lie in [lo, hi).
bool spectrum_in_range(const IntMatrix& m, const Rational& lo, const Rational& hi);
// Number of distinct eigenvalues >= bound.
int count_eigenvalues_at_least(const IntMatrix& m, const Rational& bound);

struct PerronFrobenius {
  double eigenvalue = 0;
  Eigen::VectorXd vector;  // strictly positive, entries sum to 1
};

PerronFrobenius pf_vector(const IntMatrix& m, double tol);
PerronFrobenius pf_vector(const Eigen::MatrixXd& m, double tol);

}  // namespace smallquot
