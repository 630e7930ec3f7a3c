// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

#include "oracles.hpp"
#include "reference_data.hpp"
#include "smallquot/based_algebra.hpp"
#include "smallquot/dihedral.hpp"
#include "smallquot/fibpoly.hpp"
#include "smallquot/higher_rank.hpp"
#include "smallquot/intmat.hpp"
#include "smallquot/quiver.hpp"
#include "smallquot/staircase.hpp"
#include "smallquot/sturm.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>

using namespace smallquot;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int totient(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

std::string canon_key(const IntMatrix& m) { return to_string(canonical_form(m)); }

Check fibonacci_tables() {
  Check c;
  for (std::size_t i = 0; i < reference::fib_f_table.size(); ++i)
    c.require(to_string(fib_f(static_cast<int>(i))) == reference::fib_f_table[i], "f_" + std::to_string(i));
  for (std::size_t i = 0; i < reference::fib_fbar_table.size(); ++i)
    c.require(to_string(fib_irreducible_factor(static_cast<int>(i))) == reference::fib_fbar_table[i],
              "fbar_" + std::to_string(i));
  return c;
}

Check factorization() {
  Check c;
  for (int i = 1; i <= 60; ++i) {
    IntPolynomial prod = IntPolynomial::constant(1);
    for (const auto& [d, p] : divisor_factorization(i)) prod = prod * p;
    c.require(prod == fib_f(i), "product at i=" + std::to_string(i));
    if (i > 2) c.require(fib_irreducible_factor(i).degree() == totient(i) / 2, "degree at i=" + std::to_string(i));
  }
  return c;
}

Check root_bounds() {
  Check c;
  for (int i = 3; i <= 30; ++i) {
    const IntPolynomial p = fib_irreducible_factor(i);
    const SturmSequence s(p);
    c.require(s.count_real_roots() == p.degree(), "real roots at i=" + std::to_string(i));
    c.require(s.count_roots(Rational(0), Rational(4)) == p.degree() && sign_at(p, Rational(4)) != 0,
              "roots in (0,4) at i=" + std::to_string(i));
    if (i > 3) c.require(compare_max_roots(fib_irreducible_factor(i - 1), p) < 0, "increase at i=" + std::to_string(i));
  }
  return c;
}

Check exceptional_minpolys() {
  Check c;
  c.require(minpoly_symmetric(gram(exceptional(1), Side::left)) == int_polynomial({-1, 1}) * int_polynomial({1, -4, 1}), "X1");
  c.require(minpoly_symmetric(gram(exceptional(2), Side::left)) == int_polynomial({-3, 9, -6, 1}), "X2");
  c.require(minpoly_symmetric(gram(exceptional(3), Side::left)) == int_polynomial({1, -8, 14, -7, 1}), "X3");
  c.require(equal(exceptional(1), reference::x1) && equal(exceptional(2), reference::x2) && equal(exceptional(3), reference::x3),
            "exceptional matrices");
  return c;
}

Check classification_oracle() {
  Check c;
  std::set<std::string> expected;
  for (int r = 1; r <= 4; ++r)
    for (int col = 1; col <= 5; ++col)
      for (const auto& [cls, m] : classification_universe(r, col)) expected.insert(canon_key(m));
  std::set<std::string> found;
  for (const auto& m : brute_force_under4(4, 5, 1)) found.insert(to_string(m));
  c.require(found == expected, "survivor set differs (" + std::to_string(found.size()) + " vs " +
                                   std::to_string(expected.size()) + ")");
  return c;
}

Check dihedral_classification() {
  Check c;
  for (int n : {3, 5, 7, 9, 11}) {
    const auto cands = enumerate_B(n);
    c.require(cands.size() == 1 && equal(cands[0].canonical, canonical_form(make_staircase((n - 1) / 2, (n - 1) / 2))),
              "odd n=" + std::to_string(n));
  }
  auto keys = [](const std::vector<BCandidate>& v) {
    std::set<std::string> out;
    for (const auto& x : v) out.insert(to_string(x.canonical));
    return out;
  };
  auto expect = [](const std::vector<IntMatrix>& v) {
    std::set<std::string> out;
    for (const auto& m : v) out.insert(canon_key(m));
    return out;
  };
  c.require(enumerate_B(6).size() == 4 && keys(enumerate_B(6)) == expect(reference::b_list_n6), "n=6");
  c.require(enumerate_B(8).size() == 4 && keys(enumerate_B(8)) == expect(reference::b_list_n8), "n=8");
  const std::vector<IntMatrix> n10{make_staircase(5, 4), make_staircase(4, 5), make_extended_staircase(3, 2, Extension::row),
                                   make_extended_staircase(2, 3, Extension::column)};
  c.require(enumerate_B(10).size() == 4 && keys(enumerate_B(10)) == expect(n10), "n=10");
  const auto n12 = enumerate_B(12);
  int hypothetical = 0;
  for (const auto& x : n12)
    if (x.hypothetical) {
      ++hypothetical;
      c.require(equal(x.canonical, canonical_form(reference::x1)) ||
                    equal(x.canonical, canonical_form(IntMatrix(reference::x1.transpose()))),
                "n=12 hypothetical entry is not X1");
    }
  c.require(n12.size() == 6 && hypothetical == 2, "n=12 count");
  return c;
}

Check recover_round_trip() {
  Check c;
  for (int n = 3; n <= 20; ++n) {
    std::vector<IntMatrix> bs;
    if (n % 2) {
      bs.push_back(cell_rep_B_odd(n).B());
    } else {
      for (auto side : {DihedralSide::s, DihedralSide::t}) {
        bs.push_back(cell_rep_B(n, side).B());
        if (n >= 6) bs.push_back(n_rep_B(n, side).B());
      }
    }
    for (const auto& b : bs) c.require(recover_n(b) == n, "n=" + std::to_string(n) + " B=" + to_string(b));
  }
  return c;
}

Check cell_tables() {
  Check c;
  for (const auto& [type, expected] : reference::cell_tables) {
    const CellTable table = enumerate_J(CoxeterSystem::parse(type));
    const int rank = table.system().rank();
    std::size_t total = 0;
    for (int r = 0; r < rank; ++r)
      for (int l = 0; l < rank; ++l) {
        std::set<std::string> got, want(expected[r][l].begin(), expected[r][l].end());
        for (const auto& w : table.box(r, l)) got.insert(word_to_string(w));
        c.require(got == want, type + " box R" + std::to_string(r + 1) + " L" + std::to_string(l + 1));
        total += want.size();
      }
    c.require(table.elements().size() == total, type + " size");
  }
  for (int k = 3; k <= 30; ++k) {
    const CellTable t = enumerate_J(CoxeterSystem::I2(k));
    const auto diag = static_cast<std::size_t>(k / 2), off = k % 2 ? diag : diag - 1;
    c.require(t.box(0, 0).size() == diag && t.box(1, 1).size() == diag && t.box(0, 1).size() == off &&
                  t.box(1, 0).size() == off,
              "dihedral box counts k=" + std::to_string(k));
  }
  return c;
}

Check assemblies() {
  Check c;
  for (const char* type : {"H3", "H4", "F4", "B3", "B4"}) {
    const auto found = assembly_search(CoxeterSystem::parse(type), 16);
    std::size_t expected_count = 0;
    for (const auto& p : reference::principal_matrices) {
      if (p.type != type) continue;
      ++expected_count;
      const AssemblyCandidate ref{CoxeterSystem::parse(type), p.assignment, p.M};
      bool matched = false;
      for (const auto& f : found) matched = matched || equivalent_assemblies(f, ref);
      c.require(matched, std::string(type) + " misses a published matrix");
    }
    c.require(found.size() == expected_count, std::string(type) + " count " + std::to_string(found.size()));
  }
  return c;
}

Check special_eigenvalues() {
  Check c;
  const SharedEigenvalue h3 = shared_top_eigenvalue(CoxeterSystem::H3(), 1e-9);
  c.require(std::abs(h3.value - (2 + std::sqrt(2 * std::sqrt(5.0) + 10) / 2)) < 1e-9, "H3 value");
  c.require(std::abs(h3.cell_eigenvalue - h3.vsign_eigenvalue) < 1e-9, "H3 agreement");
  const SharedEigenvalue h4 = shared_top_eigenvalue(CoxeterSystem::H4(), 1e-9);
  c.require(std::abs(h4.value - 3.98904) < 1e-4, "H4 value");
  c.require(std::abs(h4.cell_eigenvalue - h4.vsign_eigenvalue) < 1e-9, "H4 agreement");
  const SpecialModule m3 = special_module_matrices(CoxeterSystem::H3());
  const SpecialModule m4 = special_module_matrices(CoxeterSystem::H4());
  c.require(equal(m3.cell_matrix, reference::h3_cell_matrix) && equal(m4.cell_matrix, reference::h4_cell_matrix),
            "cell module matrices");
  return c;
}

Check quiver_round_trips() {
  Check c;
  for (const auto& p : reference::principal_matrices) {
    const ZigzagAlgebra z = from_m_matrix(p.M);
    c.require(equal(cartan_matrix(z), p.M), p.type + " cartan");
    c.require(dynkin_type(z) == p.dynkin, p.type + " dynkin " + dynkin_type(z));
  }
  for (int n = 3; n <= 5; ++n) {
    for (const auto& f : assembly_search(CoxeterSystem::B(n), 2 * n - 1)) {
      const ZigzagAlgebra z = from_m_matrix(f.M);
      const auto size = f.M.rows();
      c.require(equal(cartan_matrix(z), f.M), "B cartan");
      const std::string want = size == n + 1 ? "D" + std::to_string(n + 1) : "A" + std::to_string(2 * n - 1);
      c.require((size == n + 1 || size == 2 * n - 1) && dynkin_type(z) == want, "B" + std::to_string(n) + " family");
    }
  }
  for (int n = 3; n <= 12; ++n)
    for (const auto& cand : enumerate_B(n)) {
      const IntMatrix m = DihedralRep(n, cand.matrix).M();
      c.require(equal(cartan_matrix(from_m_matrix(m)), m), "I2 cartan");
    }
  c.require(dynkin_type(from_m_matrix(reference::m_i2_12)) == "E6", "I2(12) hypothetical");
  for (const auto& cand : enumerate_B(12))
    if (cand.hypothetical)
      c.require(dynkin_type(from_m_matrix(DihedralRep(12, cand.matrix).M())) == "E6", "I2(12) generated");
  return c;
}

Check representation_property() {
  Check c;
  for (int n = 3; n <= 12; ++n) {
    const StructureConstants sc = structure_constants(n);
    for (const auto& cand : enumerate_B(n)) {
      const DihedralRep rep(n, cand.matrix);
      std::vector<IntMatrix> theta;
      for (const auto& w : sc.basis) theta.push_back(theta_matrix(rep, w));
      for (std::size_t x = 0; x < sc.dim(); ++x)
        for (std::size_t y = 0; y < sc.dim(); ++y) {
          IntMatrix sum = zero_matrix(rep.size(), rep.size());
          for (std::size_t z = 0; z < sc.dim(); ++z) sum += theta[z] * BigInt(sc.gamma[x][y][z]);
          c.require(equal(theta[x] * theta[y], sum), "product relation n=" + std::to_string(n));
        }
      const auto top = theta_power_matrices(rep, n);
      c.require(is_zero(top.first) && is_zero(top.second), "w0 does not vanish n=" + std::to_string(n));
    }
  }
  return c;
}

Check based_algebra_consistency() {
  Check c;
  for (int n = 3; n <= 12; ++n) {
    const StructureConstants sc = structure_constants(n);
    const BasedAlgebra a = BasedAlgebra::from(sc);
    std::vector<std::size_t> j, ends_s, ends_t, starts_s, starts_t;
    for (std::size_t i = 1; i < sc.dim(); ++i) {
      j.push_back(i);
      (sc.basis[i].back() == 0 ? ends_s : ends_t).push_back(i);
      (sc.basis[i].front() == 0 ? starts_s : starts_t).push_back(i);
    }
    const std::vector<std::vector<std::size_t>> two{{0}, j}, left{{0}, ends_s, ends_t}, right{{0}, starts_s, starts_t};
    c.require(cells(a, CellSide::two_sided).cells == two, "two-sided cells n=" + std::to_string(n));
    c.require(cells(a, CellSide::left).cells == left, "left cells n=" + std::to_string(n));
    c.require(cells(a, CellSide::right).cells == right, "right cells n=" + std::to_string(n));
    for (const auto& cand : enumerate_B(n)) {
      const DihedralRep rep(n, cand.matrix);
      std::vector<RatMatrix> action;
      for (const auto& w : sc.basis) action.push_back(to_rational(theta_matrix(rep, w)));
      const BasedModule m(a, action);
      c.require(apex(m) == j, "apex n=" + std::to_string(n));
    }
  }
  return c;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Fibonacci tables", 1, fibonacci_tables},
      {2, "factorization over divisors and degrees", 5, factorization},
      {3, "roots of fbar_i in (0,4), increasing maxima", 10, root_bounds},
      {4, "exceptional minimal polynomials", 1, exceptional_minpolys},
      {5, "brute-force classification up to 4x5", 300, classification_oracle},
      {6, "dihedral candidate lists", 30, dihedral_classification},
      {7, "recover_n round trip", 10, recover_round_trip},
      {8, "cell tables", 5, cell_tables},
      {9, "higher-rank principal matrices", 120, assemblies},
      {10, "special eigenvalues", 1, special_eigenvalues},
      {11, "quiver round trips", 1, quiver_round_trips},
      {12, "representation property", 30, representation_property},
      {13, "based-algebra cells and apex", 10, based_algebra_consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.ok && seconds > c.limit_seconds) {
      result.ok = false;
      result.detail = "time limit of " + std::to_string(c.limit_seconds) + " s exceeded";
    }
    failures += !result.ok;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (result.ok ? "PASS" : "FAIL") << "  " << c.name << " ("
              << std::fixed << std::setprecision(2) << seconds << " s)";
    if (!result.ok) std::cout << "  " << result.detail;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
