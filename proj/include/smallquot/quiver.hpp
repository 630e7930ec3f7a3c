#pragma once

// Zigzag algebras of simple graphs: Cartan matrices, Loewy layers of the
// indecomposable projectives, and simply laced Dynkin recognition.

#include "smallquot/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace smallquot {

class ZigzagAlgebra {
 public:
  // Symmetric 0-1 adjacency with zero diagonal and a connected graph.
  explicit ZigzagAlgebra(IntMatrix adjacency);

  int vertices() const { return static_cast<int>(adjacency_.rows()); }
  const IntMatrix& adjacency() const { return adjacency_; }
  std::vector<int> neighbours(int v) const;
  std::vector<std::pair<int, int>> edges() const;

 private:
  IntMatrix adjacency_;
};

ZigzagAlgebra from_m_matrix(const IntMatrix& m);

// 2E plus the adjacency matrix.
IntMatrix cartan_matrix(const ZigzagAlgebra& a);

struct LoewyLayers {
  std::vector<int> top, middle, socle;
};

LoewyLayers loewy_layers(const ZigzagAlgebra& a, int vertex);

// "A5", "D6", "E6", "E7", "E8" or "NotSimplyLacedDynkin".
std::string dynkin_type(const ZigzagAlgebra& a);

}  // namespace smallquot
