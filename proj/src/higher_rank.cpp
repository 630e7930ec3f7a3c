#include "smallquot/higher_rank.hpp"

#include "smallquot/intmat.hpp"
#include "smallquot/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace smallquot {

namespace {

Rank2Block block_from(int m, IntMatrix b) {
  const auto a = b.rows(), c = b.cols();
  IntMatrix first = zero_matrix(a + c, a + c), second = zero_matrix(a + c, a + c);
  first.topLeftCorner(a, a) = 2 * identity(a);
  first.topRightCorner(a, c) = b;
  second.bottomLeftCorner(c, a) = b.transpose();
  second.bottomRightCorner(c, c) = 2 * identity(c);
  return {m, std::move(b), std::move(first), std::move(second)};
}

}  // namespace

std::vector<Rank2Block> rank2_blocks(int m) {
  switch (m) {
    case 3: return {block_from(3, int_matrix({{1}}))};
    case 4: return {block_from(4, int_matrix({{1}, {1}})), block_from(4, int_matrix({{1, 1}}))};
    case 5: return {block_from(5, int_matrix({{1, 0}, {1, 1}}))};
    default: throw Error(Errc::unsupported, "rank-two blocks exist for m = 3, 4, 5");
  }
}

namespace {

bool connected(const IntMatrix& m) {
  const auto n = m.rows();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Eigen::Index> stack{0};
  seen[0] = 1;
  Eigen::Index count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (Eigen::Index w = 0; w < n; ++w)
      if (!seen[w] && m(v, w) != 0) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

void check_tree_labels(const CoxeterSystem& system) {
  const auto edges = system.edges();
  if (system.rank() < 2 || static_cast<int>(edges.size()) != system.rank() - 1)
    throw Error(Errc::unsupported, "assembly needs a connected tree Coxeter diagram");
  for (auto [s, t] : edges)
    if (system.m(s, t) > 5) throw Error(Errc::unsupported, "edge labels above 5 are not supported");
}

}  // namespace

std::vector<EdgeBlock> edge_certificates(const AssemblyCandidate& c) {
  const auto& m = c.M;
  const auto n = static_cast<int>(m.rows());
  if (!is_square(m) || static_cast<int>(c.assignment.size()) != n)
    throw Error(Errc::shape, "assignment does not match the matrix size");
  std::vector<EdgeBlock> out;
  for (auto [i, j] : c.system.edges()) {
    const int label = c.system.m(i, j);
    const auto templates = rank2_blocks(label);
    std::vector<int> objects;
    for (int p = 0; p < n; ++p)
      if (c.assignment[p] == i || c.assignment[p] == j) objects.push_back(p);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int start : objects) {
      if (seen[start]) continue;
      EdgeBlock block{i, j, label, {}, {}};
      std::vector<int> stack{start};
      seen[start] = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        (c.assignment[v] == i ? block.first_objects : block.second_objects).push_back(v);
        for (int w : objects)
          if (!seen[w] && m(v, w) != 0 && c.assignment[w] != c.assignment[v]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      std::sort(block.first_objects.begin(), block.first_objects.end());
      std::sort(block.second_objects.begin(), block.second_objects.end());
      IntMatrix b(static_cast<Eigen::Index>(block.first_objects.size()),
                  static_cast<Eigen::Index>(block.second_objects.size()));
      for (std::size_t r = 0; r < block.first_objects.size(); ++r)
        for (std::size_t s = 0; s < block.second_objects.size(); ++s)
          b(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = m(block.first_objects[r], block.second_objects[s]);
      bool matched = false;
      if (b.size() > 0) {
        const IntMatrix canon = canonical_form(b);
        for (const auto& t : templates)
          matched |= t.B.rows() == b.rows() && t.B.cols() == b.cols() && equal(canonical_form(t.B), canon);
      }
      if (!matched) throw Error(Errc::inconsistent, "edge restriction is not a sum of rank-two blocks");
      out.push_back(std::move(block));
    }
  }
  return out;
}

bool verify_assembly(const AssemblyCandidate& c, const AssemblyOptions& options) {
  const auto& m = c.M;
  const auto n = static_cast<int>(m.rows());
  if (!is_square(m) || static_cast<int>(c.assignment.size()) != n)
    throw Error(Errc::shape, "assignment does not match the matrix size");
  for (int g : c.assignment)
    if (g < 0 || g >= c.system.rank()) throw Error(Errc::precondition, "assignment uses an unknown generator");
  if (!is_symmetric(m)) return false;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p == q) {
        if (m(p, q) != 2) return false;
        continue;
      }
      const int gp = c.assignment[p], gq = c.assignment[q];
      if ((gp == gq || c.system.m(gp, gq) == 2) && m(p, q) != 0) return false;
    }
  if (!connected(m)) return false;
  if (options.require_size_multiple && n % c.system.rank() != 0) return false;
  try {
    edge_certificates(c);
  } catch (const Error& e) {
    if (e.code() == Errc::inconsistent) return false;
    throw;
  }
  return true;
}

IntMatrix colored_canonical_form(const IntMatrix& m, const std::vector<int>& colors) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> slot_color = colors;
  std::sort(slot_color.begin(), slot_color.end());
  std::vector<long long> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries[static_cast<std::size_t>(i * n + j)] = m(i, j).convert_to<long long>();
  auto at = [&](int i, int j) { return entries[static_cast<std::size_t>(i * n + j)]; };

  // The key is the concatenation over k of row p_k restricted to p_0..p_k.
  std::vector<long long> best, current;
  std::vector<int> best_perm, perm;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  bool have_best = false;
  std::function<void(int, bool)> search = [&](int k, bool tied) {
    if (k == n) {
      if (!have_best || current < best) {
        best = current;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    const std::size_t mark = current.size();
    for (int p = 0; p < n; ++p) {
      if (used[p] || colors[p] != slot_color[k]) continue;
      bool still_tied = tied && have_best;
      bool worse = false;
      for (int q = 0; q <= k && !worse; ++q) {
        const long long v = q < k ? at(p, perm[q]) : at(p, p);
        current.push_back(v);
        if (still_tied) {
          const long long b = best[current.size() - 1];
          if (v > b) worse = true;
          else if (v < b) still_tied = false;
        }
      }
      if (!worse) {
        used[p] = 1;
        perm.push_back(p);
        search(k + 1, still_tied);
        perm.pop_back();
        used[p] = 0;
      }
      current.resize(mark);
    }
  };
  search(0, true);
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m(best_perm[i], best_perm[j]);
  return out;
}

bool equivalent_assemblies(const AssemblyCandidate& a, const AssemblyCandidate& b) {
  if (a.M.rows() != b.M.rows()) return false;
  auto ca = a.assignment, cb = b.assignment;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return false;
  return equal(colored_canonical_form(a.M, a.assignment), colored_canonical_form(b.M, b.assignment));
}

namespace {

struct Assembler {
  const CoxeterSystem& system;
  int max_size;
  AssemblyOptions options;
  std::vector<std::pair<int, int>> order;  // (parent, child) in breadth-first order
  std::vector<int> gen;
  std::vector<std::pair<int, int>> links;
  std::vector<std::pair<IntMatrix, AssemblyCandidate>> found;

  void finish() {
    const int n = static_cast<int>(gen.size());
    IntMatrix m = 2 * identity(n);
    for (auto [p, q] : links) m(p, q) = m(q, p) = 1;
    AssemblyCandidate cand{system, gen, m};
    if (!verify_assembly(cand, options)) return;
    IntMatrix key = colored_canonical_form(m, gen);
    for (const auto& f : found)
      if (equal(f.first, key) && f.second.assignment.size() == gen.size()) {
        auto a = f.second.assignment, b = gen;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a == b) return;
      }
    found.emplace_back(std::move(key), std::move(cand));
  }

  void edge(std::size_t e) {
    if (e == order.size()) return finish();
    std::vector<int> parents;
    for (int p = 0; p < static_cast<int>(gen.size()); ++p)
      if (gen[p] == order[e].first) parents.push_back(p);
    place(e, parents);
  }

  // Cover `remaining` parent objects with rank-two blocks of edge e.
  void place(std::size_t e, const std::vector<int>& remaining) {
    if (remaining.empty()) return edge(e + 1);
    const auto [parent, child] = order[e];
    for (const auto& t : rank2_blocks(system.m(parent, child))) {
      const auto a = static_cast<int>(t.B.rows()), b = static_cast<int>(t.B.cols());
      if (static_cast<int>(gen.size()) + b > max_size || a > static_cast<int>(remaining.size())) continue;
      // The first remaining object takes some slot; the other slots draw
      // from the rest in every order.
      std::vector<int> slots(static_cast<std::size_t>(a), -1);
      std::vector<char> taken(remaining.size(), 0);
      taken[0] = 1;
      for (int first_slot = 0; first_slot < a; ++first_slot) {
        slots.assign(static_cast<std::size_t>(a), -1);
        slots[static_cast<std::size_t>(first_slot)] = remaining[0];
        fill_slots(e, t, remaining, taken, slots, 0);
      }
    }
  }

  void fill_slots(std::size_t e, const Rank2Block& t, const std::vector<int>& remaining, std::vector<char>& taken,
                  std::vector<int>& slots, std::size_t k) {
    if (k == slots.size()) return attach(e, t, remaining, taken, slots);
    if (slots[k] != -1) return fill_slots(e, t, remaining, taken, slots, k + 1);
    for (std::size_t r = 1; r < remaining.size(); ++r) {
      if (taken[r]) continue;
      taken[r] = 1;
      slots[k] = remaining[r];
      fill_slots(e, t, remaining, taken, slots, k + 1);
      slots[k] = -1;
      taken[r] = 0;
    }
  }

  void attach(std::size_t e, const Rank2Block& t, const std::vector<int>& remaining, const std::vector<char>& taken,
              const std::vector<int>& slots) {
    const int child = order[e].second;
    const std::size_t gen_mark = gen.size(), link_mark = links.size();
    const int base = static_cast<int>(gen.size());
    for (Eigen::Index c = 0; c < t.B.cols(); ++c) gen.push_back(child);
    for (Eigen::Index r = 0; r < t.B.rows(); ++r)
      for (Eigen::Index c = 0; c < t.B.cols(); ++c)
        if (t.B(r, c) != 0) links.emplace_back(slots[static_cast<std::size_t>(r)], base + static_cast<int>(c));
    std::vector<int> rest;
    for (std::size_t r = 0; r < remaining.size(); ++r)
      if (!taken[r]) rest.push_back(remaining[r]);
    place(e, rest);
    gen.resize(gen_mark);
    links.resize(link_mark);
  }
};

}  // namespace

std::vector<AssemblyCandidate> assembly_search(const CoxeterSystem& system, int max_size,
                                               const AssemblyOptions& options) {
  check_tree_labels(system);
  if (max_size < 1) throw Error(Errc::precondition, "size bound must be positive");
  if (max_size > 16) throw Error(Errc::bound_exceeded, "size bound above 16");
  Assembler a{system, max_size, options, {}, {}, {}, {}};
  std::vector<char> seen(static_cast<std::size_t>(system.rank()), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int t = 0; t < system.rank(); ++t)
      if (!seen[t] && system.m(queue[head], t) > 2) {
        seen[t] = 1;
        queue.push_back(t);
        a.order.emplace_back(queue[head], t);
      }
  for (int roots = 1; roots <= max_size; ++roots) {
    a.gen.assign(static_cast<std::size_t>(roots), 0);
    a.links.clear();
    a.edge(0);
  }
  std::sort(a.found.begin(), a.found.end(), [](const auto& x, const auto& y) {
    if (x.second.M.rows() != y.second.M.rows()) return x.second.M.rows() < y.second.M.rows();
    if (x.second.assignment != y.second.assignment) return x.second.assignment < y.second.assignment;
    return lex_less(x.first, y.first);
  });
  std::vector<AssemblyCandidate> out;
  for (auto& f : a.found) out.push_back(std::move(f.second));
  return out;
}

SpecialModule special_module_matrices(const CoxeterSystem& system) {
  if (system.name() != "H3" && system.name() != "H4")
    throw Error(Errc::unsupported, "special module matrices are provided for H3 and H4");
  const CellTable table = enumerate_J(system);
  SpecialModule out;
  for (const auto& w : table.elements())
    if (CellTable::left_cell_of(w) == 0) out.cell_basis.push_back(w);
  std::stable_sort(out.cell_basis.begin(), out.cell_basis.end(), [](const Word& a, const Word& b) {
    if (a.front() != b.front()) return a.front() < b.front();
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  const auto n = static_cast<Eigen::Index>(out.cell_basis.size());
  auto index = [&](const Word& w) -> Eigen::Index {
    const auto it = std::find(out.cell_basis.begin(), out.cell_basis.end(), w);
    return it == out.cell_basis.end() ? -1 : static_cast<Eigen::Index>(it - out.cell_basis.begin());
  };
  out.cell_matrix = zero_matrix(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    const Word& w = out.cell_basis[static_cast<std::size_t>(col)];
    for (int s = 0; s < system.rank(); ++s) {
      if (w.front() == s) {
        out.cell_matrix(col, col) += 2;
        continue;
      }
      Word longer{s};
      longer.insert(longer.end(), w.begin(), w.end());
      if (table.contains(longer)) out.cell_matrix(index(longer), col) += 1;
      const Word rest(w.begin() + 1, w.end());
      if (!rest.empty() && rest.front() == s) out.cell_matrix(index(rest), col) += 1;
    }
  }
  const auto r = system.rank();
  out.vsign_matrix = Matrix<QuadraticElement>(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      // -2cos(pi/m) off the diagonal.
      QuadraticElement v(0);
      if (i == j) v = QuadraticElement(2);
      else if (system.m(i, j) == 3) v = QuadraticElement(-1);
      else if (system.m(i, j) == 5) v = QuadraticElement(Rational(-1, 2), Rational(-1, 2), 5);
      else if (system.m(i, j) != 2) throw Error(Errc::unsupported, "edge label outside Q(sqrt 5)");
      out.vsign_matrix(i, j) = v;
    }
  return out;
}

SharedEigenvalue shared_top_eigenvalue(const CoxeterSystem& system, double tol) {
  if (!(tol > 0)) throw Error(Errc::precondition, "tolerance must be positive");
  const SpecialModule sm = special_module_matrices(system);
  SharedEigenvalue out;
  out.cell_eigenvalue = pf_vector(sm.cell_matrix, std::min(tol, 1e-9)).eigenvalue;
  const auto r = sm.vsign_matrix.rows();
  Eigen::MatrixXd v(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) v(i, j) = sm.vsign_matrix(i, j).to_double();
  out.vsign_eigenvalue = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(v).eigenvalues().maxCoeff();
  if (std::abs(out.cell_eigenvalue - out.vsign_eigenvalue) > tol)
    throw Error(Errc::internal, "top eigenvalues of the two models disagree");
  out.value = out.vsign_eigenvalue;
  const auto poly = berkowitz(sm.vsign_matrix);
  double acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * out.value + it->to_double();
  out.residual = std::abs(acc);
  if (out.residual > 1e-9) throw Error(Errc::internal, "characteristic polynomial residual too large");
  return out;
}

}  // namespace smallquot
