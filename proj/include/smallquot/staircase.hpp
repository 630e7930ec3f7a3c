#pragma once

// Staircase, extended staircase and exceptional 0-1 matrices: the complete
// list of non-negative integer matrices whose Gram spectra lie below 4.

#include "smallquot/numeric.hpp"

#include <string>
#include <vector>

namespace smallquot {

enum class MatrixKind { Staircase, ExtendedStaircase, X1, X2, X3, Unclassified };

const char* to_string(MatrixKind kind);

struct MatrixClass {
  MatrixKind kind = MatrixKind::Unclassified;
  int rows = 0;
  int cols = 0;
  // Extended staircase display: 'a' square base plus leading column,
  // 'b' square base plus trailing row, 'c' k x (k+1) base plus leading
  // column; uppercase for the transposed display. 0 otherwise.
  char variant = 0;
  // Only meaningful for X1, X2, X3.
  bool transposed = false;
  // A_n, D_n, E6, E7, E8 by the staircase/extended/exceptional correspondence.
  std::string dynkin;

  friend bool operator==(const MatrixClass&, const MatrixClass&) = default;
};

std::string describe(const MatrixClass& c);

IntMatrix make_staircase(int rows, int cols);

enum class Extension { row, column };
IntMatrix make_extended_staircase(int base_rows, int base_cols, Extension extension);

IntMatrix exceptional(int which);

// Lexicographically least matrix (row-major) under independent row and
// column permutations.
IntMatrix canonical_form(const IntMatrix& x);

// Both Gram matrices irreducible and all their eigenvalues in [0, 4).
bool satisfies_under4(const IntMatrix& x);

// Every generated staircase, extended staircase and exceptional matrix of
// the given shape, paired with its class. Staircases come first.
std::vector<std::pair<MatrixClass, IntMatrix>> classification_universe(int rows, int cols);

MatrixClass classify_under4(const IntMatrix& x);

// Canonical forms of all matrices with entries in [0, max_entry] and shape
// at most max_rows x max_cols that satisfy the spectral condition; sorted.
std::vector<IntMatrix> brute_force_under4(int max_rows, int max_cols, int max_entry = 2);

}  // namespace smallquot
