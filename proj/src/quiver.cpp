#include "smallquot/quiver.hpp"

#include <algorithm>

namespace smallquot {

namespace {

bool graph_connected(const IntMatrix& adj) {
  const auto n = adj.rows();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Eigen::Index> stack{0};
  seen[0] = 1;
  Eigen::Index count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (Eigen::Index w = 0; w < n; ++w)
      if (!seen[w] && adj(v, w) != 0) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

}  // namespace

ZigzagAlgebra::ZigzagAlgebra(IntMatrix adjacency) : adjacency_(std::move(adjacency)) {
  if (adjacency_.rows() < 1 || !is_square(adjacency_)) throw Error(Errc::shape, "adjacency must be square and non-empty");
  if (!is_symmetric(adjacency_)) throw Error(Errc::not_symmetric, "adjacency must be symmetric");
  for (Eigen::Index i = 0; i < adjacency_.rows(); ++i)
    for (Eigen::Index j = 0; j < adjacency_.cols(); ++j) {
      const auto& v = adjacency_(i, j);
      if (i == j ? v != 0 : (v != 0 && v != 1)) throw Error(Errc::precondition, "adjacency must be 0-1 with zero diagonal");
    }
  if (!graph_connected(adjacency_)) throw Error(Errc::reducible, "graph must be connected");
}

std::vector<int> ZigzagAlgebra::neighbours(int v) const {
  if (v < 0 || v >= vertices()) throw Error(Errc::precondition, "vertex out of range");
  std::vector<int> out;
  for (int w = 0; w < vertices(); ++w)
    if (adjacency_(v, w) != 0) out.push_back(w);
  return out;
}

std::vector<std::pair<int, int>> ZigzagAlgebra::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < vertices(); ++v)
    for (int w = v + 1; w < vertices(); ++w)
      if (adjacency_(v, w) != 0) out.emplace_back(v, w);
  return out;
}

ZigzagAlgebra from_m_matrix(const IntMatrix& m) {
  if (!is_square(m) || m.rows() < 1) throw Error(Errc::shape, "M must be square and non-empty");
  if (!is_symmetric(m)) throw Error(Errc::not_symmetric, "M must be symmetric");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 2) throw Error(Errc::precondition, "diagonal of M must be 2");
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0 && m(i, j) != 1)
        throw Error(Errc::unsupported, "off-diagonal entries of M must be 0 or 1");
  }
  return ZigzagAlgebra(m - 2 * identity(m.rows()));
}

IntMatrix cartan_matrix(const ZigzagAlgebra& a) { return 2 * identity(a.vertices()) + a.adjacency(); }

LoewyLayers loewy_layers(const ZigzagAlgebra& a, int vertex) {
  return {{vertex}, a.neighbours(vertex), {vertex}};
}

std::string dynkin_type(const ZigzagAlgebra& a) {
  const int n = a.vertices();
  const std::string none = "NotSimplyLacedDynkin";
  if (static_cast<int>(a.edges().size()) != n - 1) return none;
  std::vector<int> degree(static_cast<std::size_t>(n));
  int branch = -1;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(a.neighbours(v).size());
    if (degree[v] > 3) return none;
    if (degree[v] == 3) {
      if (branch != -1) return none;
      branch = v;
    }
  }
  if (branch == -1) return "A" + std::to_string(n);
  std::vector<int> arms;
  for (int start : a.neighbours(branch)) {
    int prev = branch, cur = start, length = 1;
    while (degree[cur] == 2) {
      for (int w : a.neighbours(cur))
        if (w != prev) {
          prev = cur;
          cur = w;
          break;
        }
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
  return none;
}

}  // namespace smallquot
