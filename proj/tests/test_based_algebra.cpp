#include "smallquot/based_algebra.hpp"
#include "smallquot/dihedral.hpp"

#include <doctest.h>

using namespace smallquot;

namespace {

std::vector<std::size_t> indices_where(const StructureConstants& sc, bool (*pred)(const Word&)) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sc.dim(); ++i)
    if (pred(sc.basis[i])) out.push_back(i);
  return out;
}

// Group algebra of Z/2 in the basis {1, g}.
Tensor3 z2() {
  Tensor3 g(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
  g[0][0][0] = g[0][1][1] = g[1][0][1] = g[1][1][0] = 1;
  return g;
}

}  // namespace

TEST_CASE("axioms are checked") {
  CHECK_NOTHROW(BasedAlgebra(z2(), 0));
  CHECK_THROWS_AS(BasedAlgebra(z2(), 1), Error);
  Tensor3 neg = z2();
  neg[1][1][0] = -1;
  CHECK_THROWS_AS(BasedAlgebra{neg}, Error);
  Tensor3 nonassoc(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
  nonassoc[0][0][0] = nonassoc[0][1][0] = nonassoc[1][0][1] = nonassoc[1][1][0] = 1;
  CHECK_THROWS_AS(BasedAlgebra{nonassoc}, Error);
}

TEST_CASE("left multiplication matrices") {
  const BasedAlgebra a(z2(), 0);
  const RatMatrix g = a.left_multiplication(1);
  CHECK(g(1, 0) == 1);
  CHECK(g(0, 1) == 1);
  CHECK(g(0, 0) == 0);
}

TEST_CASE("dihedral cells") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    const StructureConstants sc = structure_constants(n);
    const BasedAlgebra a = BasedAlgebra::from(sc);
    const auto all_j = indices_where(sc, [](const Word& w) { return !w.empty(); });
    const CellPartition two = cells(a, CellSide::two_sided);
    REQUIRE(two.cells.size() == 2);
    CHECK(two.cells[0] == std::vector<std::size_t>{0});
    CHECK(two.cells[1] == all_j);
    CHECK(two.geq[1][0]);
    CHECK_FALSE(two.geq[0][1]);
    const CellPartition left = cells(a, CellSide::left);
    REQUIRE(left.cells.size() == 3);
    CHECK(left.cells[1] == indices_where(sc, [](const Word& w) { return !w.empty() && w.back() == 0; }));
    CHECK(left.cells[2] == indices_where(sc, [](const Word& w) { return !w.empty() && w.back() == 1; }));
    const CellPartition right = cells(a, CellSide::right);
    REQUIRE(right.cells.size() == 3);
    CHECK(right.cells[1] == indices_where(sc, [](const Word& w) { return !w.empty() && w.front() == 0; }));
    CHECK(right.cells[2] == indices_where(sc, [](const Word& w) { return !w.empty() && w.front() == 1; }));
    CHECK(left.cell_of(0) == 0);
  }
}

TEST_CASE("modules of classified reps have apex J") {
  for (int n = 3; n <= 12; ++n) {
    const StructureConstants sc = structure_constants(n);
    const BasedAlgebra a = BasedAlgebra::from(sc);
    for (const auto& cand : enumerate_B(n)) {
      const DihedralRep rep(n, cand.matrix);
      std::vector<RatMatrix> action;
      for (const auto& w : sc.basis) action.push_back(to_rational(theta_matrix(rep, w)));
      const BasedModule m(a, action);
      CHECK(is_transitive(m));
      const auto top = apex(m);
      CHECK(top == indices_where(sc, [](const Word& w) { return !w.empty(); }));
      const PerronFrobenius pf = special_vector(m, 1e-10);
      CHECK((pf.vector.array() > 0).all());
    }
  }
}

TEST_CASE("module axioms are checked") {
  const BasedAlgebra a(z2(), 0);
  RatMatrix one = RatMatrix::Identity(2, 2), swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK_NOTHROW(BasedModule(a, {one, swap}));
  CHECK_THROWS_AS(BasedModule(a, {one, one * Rational(2)}), Error);
  CHECK_THROWS_AS(BasedModule(a, {one}), Error);
  const BasedModule regular(a, {one, swap});
  CHECK(is_transitive(regular));
  CHECK(apex(regular) == std::vector<std::size_t>{0, 1});
  const BasedModule trivial(a, {RatMatrix::Identity(2, 2), RatMatrix::Identity(2, 2)});
  CHECK_FALSE(is_transitive(trivial));
  CHECK_THROWS_AS(apex(trivial), Error);
}

TEST_CASE("special vector of bare matrices") {
  std::vector<RatMatrix> action{to_rational(int_matrix({{2, 1}, {1, 2}}))};
  const PerronFrobenius pf = special_vector(action, 1e-12);
  CHECK(pf.eigenvalue == doctest::Approx(3.0));
  CHECK(pf.vector(0) == doctest::Approx(0.5));
}
