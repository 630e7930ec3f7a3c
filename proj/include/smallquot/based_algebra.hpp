#pragma once

// Positively based algebras and modules: cell preorders, cells, apex and
// the Perron-Frobenius special vector.

#include "smallquot/intmat.hpp"
#include "smallquot/numeric.hpp"

#include <optional>
#include <vector>

namespace smallquot {

struct StructureConstants;

// gamma[i][j][s]: coefficient of a_s in a_i a_j.
using Tensor3 = std::vector<std::vector<std::vector<Rational>>>;

class BasedAlgebra {
 public:
  // Checks non-negativity, associativity and, if given, the unit laws.
  explicit BasedAlgebra(Tensor3 gamma, std::optional<std::size_t> identity_index = std::nullopt);
  static BasedAlgebra from(const StructureConstants& sc);

  std::size_t dim() const { return gamma_.size(); }
  const Rational& gamma(std::size_t i, std::size_t j, std::size_t s) const { return gamma_[i][j][s]; }
  const Tensor3& tensor() const { return gamma_; }
  std::optional<std::size_t> identity_index() const { return identity_; }
  // Matrix of v -> a_i v in the basis; column j holds a_i a_j.
  RatMatrix left_multiplication(std::size_t i) const;

 private:
  Tensor3 gamma_;
  std::optional<std::size_t> identity_;
};

class BasedModule {
 public:
  // action[i] is the matrix of a_i; checks the module axioms exactly.
  BasedModule(BasedAlgebra algebra, std::vector<RatMatrix> action);

  const BasedAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return static_cast<std::size_t>(action_.empty() ? 0 : action_.front().rows()); }
  const std::vector<RatMatrix>& action() const { return action_; }
  RatMatrix total_action() const;

 private:
  BasedAlgebra algebra_;
  std::vector<RatMatrix> action_;
};

enum class CellSide { left, right, two_sided };

struct CellPartition {
  // Each cell sorted; cells ordered by their smallest element.
  std::vector<std::vector<std::size_t>> cells;
  // geq[a][b]: cell a is at least cell b in the induced order.
  std::vector<std::vector<bool>> geq;

  std::size_t cell_of(std::size_t element) const;
};

CellPartition cells(const BasedAlgebra& algebra, CellSide side);

bool is_transitive(const BasedModule& module);

// The maximum two-sided cell among those with an element acting non-zero.
std::vector<std::size_t> apex(const BasedModule& module);

PerronFrobenius special_vector(const BasedModule& module, double tol);
// Same data for a bare list of non-negative action matrices.
PerronFrobenius special_vector(const std::vector<RatMatrix>& action, double tol);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace smallquot
