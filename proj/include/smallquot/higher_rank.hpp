#pragma once

// Rank >= 3: gluing rank-two blocks into principal matrices M, and the
// special-module eigenvalue comparison in types H3 and H4.

#include "smallquot/coxeter.hpp"
#include "smallquot/numeric.hpp"
#include "smallquot/quadratic.hpp"

#include <vector>

namespace smallquot {

// The unique rank-two cell data for an edge labelled m: B has rows for the
// first generator's objects and columns for the second's.
struct Rank2Block {
  int m = 0;
  IntMatrix B;
  IntMatrix theta_first;   // [[2E, B], [0, 0]]
  IntMatrix theta_second;  // [[0, 0], [Bᵗ, 2E]]
};

std::vector<Rank2Block> rank2_blocks(int m);

struct AssemblyCandidate {
  CoxeterSystem system;
  std::vector<int> assignment;  // object -> generator index
  IntMatrix M;
};

struct AssemblyOptions {
  // Only keep matrices whose size is a multiple of the rank.
  bool require_size_multiple = false;
};

// Objects of the two generators of one edge that form one rank-two block.
struct EdgeBlock {
  int first = 0, second = 0, m = 0;
  std::vector<int> first_objects, second_objects;
};

// Decomposition of every edge restriction into rank-two blocks; throws
// Errc::inconsistent when some restriction does not decompose.
std::vector<EdgeBlock> edge_certificates(const AssemblyCandidate& candidate);

bool verify_assembly(const AssemblyCandidate& candidate, const AssemblyOptions& options = {});

std::vector<AssemblyCandidate> assembly_search(const CoxeterSystem& system, int max_size,
                                               const AssemblyOptions& options = {});

// Least form of M under permutations that keep objects grouped by color;
// two colored matrices are equivalent iff their forms (and sorted colors) agree.
IntMatrix colored_canonical_form(const IntMatrix& m, const std::vector<int>& colors);
bool equivalent_assemblies(const AssemblyCandidate& a, const AssemblyCandidate& b);

struct SpecialModule {
  std::vector<Word> cell_basis;  // the left cell of the first generator
  IntMatrix cell_matrix;         // action of the sum of all θ_s
  Matrix<QuadraticElement> vsign_matrix;
};

SpecialModule special_module_matrices(const CoxeterSystem& system);

struct SharedEigenvalue {
  double value = 0;
  double cell_eigenvalue = 0;
  double vsign_eigenvalue = 0;
  double residual = 0;  // |charpoly of the V⊗sign matrix at value|
};

// Throws Errc::internal when the two top eigenvalues differ by more than tol.
SharedEigenvalue shared_top_eigenvalue(const CoxeterSystem& system, double tol);

}  // namespace smallquot
