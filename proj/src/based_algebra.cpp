#include "smallquot/based_algebra.hpp"

#include "smallquot/dihedral.hpp"

#include <algorithm>

namespace smallquot {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

namespace {

bool rat_is_zero(const RatMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

bool rat_equal(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

BasedAlgebra::BasedAlgebra(Tensor3 gamma, std::optional<std::size_t> identity_index)
    : gamma_(std::move(gamma)), identity_(identity_index) {
  const std::size_t n = gamma_.size();
  if (n == 0) throw Error(Errc::shape, "algebra must have positive dimension");
  for (const auto& plane : gamma_) {
    if (plane.size() != n) throw Error(Errc::shape, "structure constant tensor must be cubic");
    for (const auto& line : plane) {
      if (line.size() != n) throw Error(Errc::shape, "structure constant tensor must be cubic");
      for (const auto& g : line)
        if (g < 0) throw Error(Errc::negative_entry, "structure constants must be non-negative");
    }
  }
  if (identity_ && *identity_ >= n) throw Error(Errc::precondition, "identity index out of range");
  // (a_i a_j) a_k = a_i (a_j a_k), coefficient of a_t.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) {
          Rational lhs = 0, rhs = 0;
          for (std::size_t s = 0; s < n; ++s) {
            if (gamma_[i][j][s] != 0) lhs += gamma_[i][j][s] * gamma_[s][k][t];
            if (gamma_[j][k][s] != 0) rhs += gamma_[j][k][s] * gamma_[i][s][t];
          }
          if (lhs != rhs) throw Error(Errc::inconsistent, "structure constants are not associative");
        }
  if (identity_) {
    const std::size_t e = *identity_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < n; ++s) {
        const Rational expected = s == i ? 1 : 0;
        if (gamma_[e][i][s] != expected || gamma_[i][e][s] != expected)
          throw Error(Errc::inconsistent, "unit laws fail for the identity index");
      }
  }
}

BasedAlgebra BasedAlgebra::from(const StructureConstants& sc) {
  Tensor3 g(sc.dim(), std::vector<std::vector<Rational>>(sc.dim(), std::vector<Rational>(sc.dim())));
  for (std::size_t i = 0; i < sc.dim(); ++i)
    for (std::size_t j = 0; j < sc.dim(); ++j)
      for (std::size_t s = 0; s < sc.dim(); ++s) g[i][j][s] = sc.gamma[i][j][s];
  return BasedAlgebra(std::move(g), 0);
}

RatMatrix BasedAlgebra::left_multiplication(std::size_t i) const {
  const auto n = static_cast<Eigen::Index>(dim());
  RatMatrix m(n, n);
  for (Eigen::Index s = 0; s < n; ++s)
    for (Eigen::Index j = 0; j < n; ++j) m(s, j) = gamma_[i][j][s];
  return m;
}

BasedModule::BasedModule(BasedAlgebra algebra, std::vector<RatMatrix> action)
    : algebra_(std::move(algebra)), action_(std::move(action)) {
  if (action_.size() != algebra_.dim()) throw Error(Errc::shape, "one action matrix per basis element is required");
  const Eigen::Index k = action_.front().rows();
  for (const auto& a : action_) {
    if (a.rows() != k || a.cols() != k) throw Error(Errc::shape, "action matrices must share one square size");
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j)
        if (a(i, j) < 0) throw Error(Errc::negative_entry, "action matrices must be non-negative");
  }
  const std::size_t n = algebra_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatMatrix expected = RatMatrix::Zero(k, k);
      for (std::size_t s = 0; s < n; ++s)
        if (algebra_.gamma(i, j, s) != 0) expected += algebra_.gamma(i, j, s) * action_[s];
      if (!rat_equal(RatMatrix(action_[i] * action_[j]), expected))
        throw Error(Errc::inconsistent, "action matrices violate the module axioms");
    }
}

RatMatrix BasedModule::total_action() const {
  const Eigen::Index k = static_cast<Eigen::Index>(dim());
  RatMatrix sum = RatMatrix::Zero(k, k);
  for (const auto& a : action_) sum += a;
  return sum;
}

std::size_t CellPartition::cell_of(std::size_t element) const {
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (std::binary_search(cells[c].begin(), cells[c].end(), element)) return c;
  throw Error(Errc::precondition, "element outside the basis");
}

CellPartition cells(const BasedAlgebra& algebra, CellSide side) {
  const std::size_t n = algebra.dim();
  // geq[x][y]: a_x >= a_y.
  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) geq[x][x] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < n; ++s) {
        if (side != CellSide::right && algebra.gamma(i, j, s) != 0) geq[s][j] = true;
        if (side != CellSide::left && algebra.gamma(j, i, s) != 0) geq[s][j] = true;
      }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (geq[x][k])
        for (std::size_t y = 0; y < n; ++y)
          if (geq[k][y]) geq[x][y] = true;
  CellPartition out;
  std::vector<char> placed(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (placed[x]) continue;
    std::vector<std::size_t> cell;
    for (std::size_t y = x; y < n; ++y)
      if (geq[x][y] && geq[y][x]) {
        cell.push_back(y);
        placed[y] = 1;
      }
    out.cells.push_back(std::move(cell));
  }
  const std::size_t c = out.cells.size();
  out.geq.assign(c, std::vector<bool>(c, false));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) out.geq[a][b] = geq[out.cells[a].front()][out.cells[b].front()];
  return out;
}

bool is_transitive(const BasedModule& module) {
  if (module.dim() == 0) return false;
  return is_irreducible_nonneg(to_double(module.total_action()));
}

std::vector<std::size_t> apex(const BasedModule& module) {
  if (!is_transitive(module)) throw Error(Errc::precondition, "apex needs a transitive module");
  const CellPartition two_sided = cells(module.algebra(), CellSide::two_sided);
  std::vector<std::size_t> live;
  for (std::size_t c = 0; c < two_sided.cells.size(); ++c)
    for (std::size_t x : two_sided.cells[c])
      if (!rat_is_zero(module.action()[x])) {
        live.push_back(c);
        break;
      }
  for (std::size_t c : live) {
    bool maximum = true;
    for (std::size_t d : live) maximum = maximum && two_sided.geq[c][d];
    if (maximum) return two_sided.cells[c];
  }
  throw Error(Errc::inconsistent, "no unique maximal non-annihilating two-sided cell");
}

PerronFrobenius special_vector(const BasedModule& module, double tol) {
  if (!is_transitive(module)) throw Error(Errc::precondition, "special vector needs a transitive module");
  return pf_vector(to_double(module.total_action()), tol);
}

PerronFrobenius special_vector(const std::vector<RatMatrix>& action, double tol) {
  if (action.empty()) throw Error(Errc::shape, "no action matrices");
  RatMatrix sum = RatMatrix::Zero(action.front().rows(), action.front().cols());
  for (const auto& a : action) sum += a;
  return pf_vector(to_double(sum), tol);
}

}  // namespace smallquot
