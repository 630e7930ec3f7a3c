#include "smallquot/intmat.hpp"

#include "smallquot/sturm.hpp"

#include <cmath>

namespace smallquot {

IntMatrix gram(const IntMatrix& x, Side side) {
  if (side == Side::left) return x * x.transpose();
  return x.transpose() * x;
}

IntPolynomial charpoly(const IntMatrix& m) { return IntPolynomial(berkowitz(m)); }

IntPolynomial minpoly_symmetric(const IntMatrix& m) {
  if (!is_symmetric(m)) throw Error(Errc::not_symmetric, "minimal polynomial needs a symmetric matrix");
  return squarefree_part(charpoly(m));
}

namespace {

template <typename Positive>
bool strongly_connected(Eigen::Index n, Positive positive) {
  if (n == 0) return false;
  if (n == 1) return positive(0, 0);
  auto reach_all = [&](bool forward) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Eigen::Index> stack{0};
    seen[0] = 1;
    Eigen::Index count = 1;
    while (!stack.empty()) {
      const Eigen::Index v = stack.back();
      stack.pop_back();
      for (Eigen::Index w = 0; w < n; ++w) {
        if (seen[w] || !(forward ? positive(v, w) : positive(w, v))) continue;
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
    return count == n;
  };
  return reach_all(true) && reach_all(false);
}

}  // namespace

bool is_irreducible_nonneg(const IntMatrix& m) {
  if (!is_square(m)) throw Error(Errc::shape, "irreducibility of a non-square matrix");
  if (has_negative_entry(m)) throw Error(Errc::negative_entry, "irreducibility needs a non-negative matrix");
  return strongly_connected(m.rows(), [&](Eigen::Index i, Eigen::Index j) { return m(i, j) > 0; });
}

bool is_irreducible_nonneg(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw Error(Errc::shape, "irreducibility of a non-square matrix");
  if ((m.array() < 0).any()) throw Error(Errc::negative_entry, "irreducibility needs a non-negative matrix");
  return strongly_connected(m.rows(), [&](Eigen::Index i, Eigen::Index j) { return m(i, j) > 0; });
}

bool spectrum_in_range(const IntMatrix& m, const Rational& lo, const Rational& hi) {
  if (!is_symmetric(m)) throw Error(Errc::not_symmetric, "spectral test needs a symmetric matrix");
  return all_roots_in(charpoly(m), lo, hi);
}

int count_eigenvalues_at_least(const IntMatrix& m, const Rational& bound) {
  if (!is_symmetric(m)) throw Error(Errc::not_symmetric, "spectral test needs a symmetric matrix");
  const IntPolynomial p = charpoly(m);
  if (p.degree() < 1) return 0;
  return SturmSequence(p).count_at_least(bound);
}

PerronFrobenius pf_vector(const IntMatrix& m, double tol) {
  if (!is_square(m)) throw Error(Errc::shape, "Perron-Frobenius data of a non-square matrix");
  if (has_negative_entry(m)) throw Error(Errc::negative_entry, "Perron-Frobenius data needs a non-negative matrix");
  return pf_vector(to_double(m), tol);
}

PerronFrobenius pf_vector(const Eigen::MatrixXd& m, double tol) {
  if (!(tol > 0)) throw Error(Errc::precondition, "tolerance must be positive");
  if (!is_irreducible_nonneg(m)) throw Error(Errc::reducible, "Perron-Frobenius data needs an irreducible matrix");
  const Eigen::Index n = m.rows();
  // Shifting by the identity makes the matrix primitive without moving eigenvectors.
  const Eigen::MatrixXd shifted = m + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  const double target = std::min(tol, 1e-6) * 1e-3;
  for (long iter = 0; iter < 20'000'000; ++iter) {
    Eigen::VectorXd w = shifted * v;
    w /= w.sum();
    const double step = (w - v).cwiseAbs().maxCoeff();
    v = std::move(w);
    if (step < target || step == 0.0) {
      const Eigen::VectorXd mv = m * v;
      const double lambda = mv.sum();
      if ((mv - lambda * v).cwiseAbs().maxCoeff() <= target * std::max(1.0, lambda)) return {lambda, v};
    }
  }
  throw Error(Errc::internal, "power iteration did not converge");
}

}  // namespace smallquot
