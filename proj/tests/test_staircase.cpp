#include "oracles.hpp"
#include "reference_data.hpp"
#include "smallquot/intmat.hpp"
#include "smallquot/staircase.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace smallquot;

namespace {

IntMatrix shuffle(const IntMatrix& m, std::mt19937& rng) {
  std::vector<int> rp(static_cast<std::size_t>(m.rows())), cp(static_cast<std::size_t>(m.cols()));
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(rp[static_cast<std::size_t>(i)], cp[static_cast<std::size_t>(j)]);
  return out;
}

std::vector<IntMatrix> all_01(int r, int c) {
  std::vector<IntMatrix> out;
  for (unsigned long bits = 0; bits < (1ul << (r * c)); ++bits) {
    IntMatrix m(r, c);
    for (int k = 0; k < r * c; ++k) m(k / c, k % c) = static_cast<long>((bits >> k) & 1);
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("staircase shapes") {
  CHECK(equal(make_staircase(2, 3), int_matrix({{1, 1, 0}, {0, 1, 1}})));
  CHECK(equal(make_staircase(3, 2), int_matrix({{1, 0}, {1, 1}, {0, 1}})));
  CHECK(equal(make_staircase(2, 2), int_matrix({{1, 1}, {0, 1}})));
  CHECK(equal(make_staircase(1, 1), int_matrix({{1}})));
  CHECK_THROWS_AS(make_staircase(1, 3), Error);
  CHECK_THROWS_AS(make_staircase(0, 1), Error);
}

TEST_CASE("extended staircases") {
  CHECK(equal(make_extended_staircase(2, 2, Extension::column), int_matrix({{1, 1, 1}, {0, 0, 1}})));
  CHECK(equal(make_extended_staircase(2, 2, Extension::row), int_matrix({{1, 1}, {0, 1}, {0, 1}})));
  CHECK(equal(make_extended_staircase(2, 3, Extension::column), int_matrix({{1, 1, 1, 0}, {0, 0, 1, 1}})));
  CHECK(equal(make_extended_staircase(3, 2, Extension::row), make_extended_staircase(2, 3, Extension::column).transpose()));
  CHECK_THROWS_AS(make_extended_staircase(2, 3, Extension::row), Error);
  CHECK_THROWS_AS(make_extended_staircase(3, 5, Extension::column), Error);
}

TEST_CASE("exceptional matrices") {
  CHECK(equal(exceptional(1), reference::x1));
  CHECK(equal(exceptional(2), reference::x2));
  CHECK(equal(exceptional(3), reference::x3));
  CHECK_THROWS_AS(exceptional(4), Error);
}

TEST_CASE("canonical form is a permutation invariant") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % 3);
    const IntMatrix canon = canonical_form(m);
    CHECK(equal(canonical_form(shuffle(m, rng)), canon));
    CHECK(equal(canonical_form(canon), canon));
    CHECK_FALSE(lex_less(m, canon));
  }
}

TEST_CASE("canonical form is the least member of the orbit") {
  for (const auto& m : all_01(2, 3)) {
    IntMatrix best = m;
    std::vector<int> rp{0, 1}, cp{0, 1, 2};
    do {
      std::sort(cp.begin(), cp.end());
      do {
        IntMatrix p(2, 3);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 3; ++j) p(i, j) = m(rp[static_cast<std::size_t>(i)], cp[static_cast<std::size_t>(j)]);
        if (lex_less(p, best)) best = p;
      } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    CHECK(equal(canonical_form(m), best));
  }
}

TEST_CASE("spectral condition agrees with the bipartite graph radius") {
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4 && r + c <= 7; ++c)
      for (const auto& m : all_01(r, c)) {
        CAPTURE(to_string(m));
        CHECK(satisfies_under4(m) == oracle::bipartite_below_two(m));
      }
}

TEST_CASE("every universe member satisfies the condition and classifies as itself") {
  for (int r = 1; r <= 7; ++r)
    for (int c = 1; c <= 7; ++c)
      for (const auto& [cls, m] : classification_universe(r, c)) {
        CAPTURE(describe(cls));
        CHECK(satisfies_under4(m));
        // Equivalent displays of one class may differ only in variant.
        const MatrixClass got = classify_under4(m);
        CHECK(got.kind == cls.kind);
        CHECK(got.rows == cls.rows);
        CHECK(got.cols == cls.cols);
        CHECK(got.dynkin == cls.dynkin);
      }
}

TEST_CASE("classification of individual matrices") {
  std::mt19937 rng(9);
  CHECK(classify_under4(shuffle(reference::x1, rng)).kind == MatrixKind::X1);
  CHECK(classify_under4(reference::x2.transpose()).transposed);
  CHECK(classify_under4(reference::x3).dynkin == "E8");
  CHECK(classify_under4(reference::x1).dynkin == "E6");
  CHECK(classify_under4(reference::x2).dynkin == "E7");
  const MatrixClass s = classify_under4(int_matrix({{1, 1, 0}, {0, 1, 1}}));
  CHECK(s.kind == MatrixKind::Staircase);
  CHECK(s.dynkin == "A5");
  const MatrixClass e = classify_under4(int_matrix({{1}, {1}, {1}}));
  CHECK(e.kind == MatrixKind::ExtendedStaircase);
  CHECK(e.dynkin == "D4");
  CHECK(describe(s) == "Staircase(2x3) A5");
}

TEST_CASE("classification errors") {
  auto code = [](const IntMatrix& m) {
    try {
      classify_under4(m);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal;
  };
  CHECK(code(IntMatrix(0, 0)) == Errc::shape);
  CHECK(code(int_matrix({{1, -1}})) == Errc::negative_entry);
  CHECK(code(int_matrix({{1, 0}, {0, 1}})) == Errc::reducible);
  CHECK(code(int_matrix({{1, 1}, {1, 1}})) == Errc::spectrum_out_of_range);
  CHECK(code(int_matrix({{1, 1, 1, 1}})) == Errc::spectrum_out_of_range);
  CHECK(code(int_matrix({{2}})) == Errc::spectrum_out_of_range);
}

TEST_CASE("brute force with entries up to 2 finds only 0-1 survivors") {
  std::vector<IntMatrix> expected;
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c)
      for (const auto& [cls, m] : classification_universe(r, c)) expected.push_back(canonical_form(m));
  std::sort(expected.begin(), expected.end(), lex_less);
  expected.erase(std::unique(expected.begin(), expected.end(), [](const IntMatrix& a, const IntMatrix& b) { return equal(a, b); }),
                 expected.end());
  const auto found = brute_force_under4(3, 3, 2);
  REQUIRE(found.size() == expected.size());
  for (std::size_t i = 0; i < found.size(); ++i) CHECK(equal(found[i], expected[i]));
  CHECK_THROWS_AS(brute_force_under4(5, 5), Error);
  CHECK_THROWS_AS(brute_force_under4(0, 2), Error);
}
