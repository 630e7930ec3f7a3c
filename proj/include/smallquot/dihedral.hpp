#pragma once

// Decategorified small quotients in dihedral type I2(n): block θ-matrices,
// annihilation by f_n, candidate enumeration and structure constants.

#include "smallquot/coxeter.hpp"
#include "smallquot/numeric.hpp"
#include "smallquot/staircase.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smallquot {

enum class DihedralSide { s, t };

const char* to_string(DihedralSide side);

class DihedralRep {
 public:
  // B is the s-objects x t-objects block.
  DihedralRep(int n, IntMatrix b);

  int n() const { return n_; }
  const IntMatrix& B() const { return b_; }
  Eigen::Index s_objects() const { return b_.rows(); }
  Eigen::Index t_objects() const { return b_.cols(); }
  Eigen::Index size() const { return b_.rows() + b_.cols(); }

  // [[2E, B], [0, 0]] and [[0, 0], [Bᵗ, 2E]].
  IntMatrix theta_s() const;
  IntMatrix theta_t() const;
  IntMatrix M() const { return theta_s() + theta_t(); }

 private:
  int n_;
  IntMatrix b_;
};

// Matrices of θ for the alternating words of length i starting with s and
// with t, from the closed polynomial formulas.
std::pair<IntMatrix, IntMatrix> theta_power_matrices(const DihedralRep& rep, int i);
// Same matrices from θ_s θ_{t_(i-1)} = θ_{s_i} + θ_{s_(i-2)}.
std::pair<IntMatrix, IntMatrix> theta_power_matrices_inductive(const DihedralRep& rep, int i);
// Matrix of θ_w for any basis word of the small quotient (θ_e is the identity).
IntMatrix theta_matrix(const DihedralRep& rep, const Word& w);

bool annihilation_test(const IntMatrix& b, int n);
// Smallest n >= 3 with f_n(BBᵗ) = f_n(BᵗB) = 0.
std::optional<int> recover_n(const IntMatrix& b, int bound = 120);

struct BCandidate {
  MatrixClass cls;
  IntMatrix matrix;     // as generated
  IntMatrix canonical;  // canonical_form(matrix)
  std::string side;  // "s", "t", or "s,t" when both cell sides agree
  bool hypothetical = false;
};

std::vector<BCandidate> enumerate_B(int n);

DihedralRep cell_rep_B(int n, DihedralSide side);
DihedralRep cell_rep_B_odd(int n);
DihedralRep n_rep_B(int n, DihedralSide side);

// Alternating word of the given length and first letter (0 = s, 1 = t).
Word alternating_word(int first, int length);

struct StructureConstants {
  int n = 0;
  // θ_e first, then J ordered by length, s-words before t-words.
  std::vector<Word> basis;
  // gamma[x][y][z]: coefficient of basis z in basis x times basis y.
  std::vector<std::vector<std::vector<long long>>> gamma;

  std::size_t index_of(const Word& w) const;
  std::size_t dim() const { return basis.size(); }
};

StructureConstants structure_constants(int n);

// Action of the small quotient on the left cell of `side`, obtained by
// restricting left multiplication. Objects: words starting with s by
// increasing length, then words starting with t. Result indexed like basis.
std::vector<IntMatrix> cell_module_matrices(const StructureConstants& sc, DihedralSide side);

}  // namespace smallquot
