#include "smallquot/cli.hpp"

#include "smallquot/based_algebra.hpp"
#include "smallquot/coxeter.hpp"
#include "smallquot/dihedral.hpp"
#include "smallquot/fibpoly.hpp"
#include "smallquot/higher_rank.hpp"
#include "smallquot/intmat.hpp"
#include "smallquot/json_io.hpp"
#include "smallquot/quiver.hpp"
#include "smallquot/staircase.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace smallquot::cli {
namespace {

struct Options {
  bool json = false;
  std::string type, file, file2, side = "all", module, matrix_file, assignment;
  int index = 0, rows = 0, cols = 0, n = 0, max_entry = 1, max_size = 12;
  double tol = 1e-9;
  bool size_multiple = false;
};

using Rows = std::vector<std::vector<std::string>>;

std::string render_table(const std::vector<std::string>& header, const Rows& rows) {
  std::size_t ncols = header.size();
  for (const auto& r : rows) ncols = std::max(ncols, r.size());
  std::vector<std::size_t> width(ncols, 0);
  auto widen = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  };
  widen(header);
  for (const auto& r : rows) widen(r);
  std::ostringstream out;
  auto rule = [&] {
    out << '+';
    for (auto w : width) out << std::string(w + 2, '-') << '+';
    out << '\n';
  };
  auto line = [&](const std::vector<std::string>& r) {
    out << '|';
    for (std::size_t c = 0; c < ncols; ++c) {
      const std::string cell = c < r.size() ? r[c] : "";
      out << ' ' << std::setw(static_cast<int>(width[c])) << cell << " |";
    }
    out << '\n';
  };
  rule();
  if (!header.empty()) {
    line(header);
    rule();
  }
  for (const auto& r : rows) line(r);
  rule();
  return out.str();
}

std::string render_matrix(const IntMatrix& m) {
  Rows rows;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    rows.emplace_back();
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows.back().push_back(m(i, j).str());
  }
  return render_table({}, rows);
}

std::string word_label(const Word& w, int rank) { return w.empty() ? "e" : word_to_string(w, rank); }

void emit(std::ostream& out, const std::string& command, Json inputs, Json results,
          std::vector<std::string> anchors) {
  Json report = {{"command", command},
                 {"inputs", std::move(inputs)},
                 {"results", std::move(results)},
                 {"anchors", std::move(anchors)}};
  out << report.dump(2) << '\n';
}

// A Report written by this tool carries its payload under "results".
Json payload(const Json& j) {
  if (j.is_object() && j.contains("results") && j.contains("command")) return j.at("results");
  return j;
}

IntMatrix read_matrix(const std::string& path) {
  try {
    return int_matrix_from_json(payload(read_json_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, path + ": " + e.what());
  }
}

Json index_list(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i] + 1;
  return out.str();
}

void cmd_cells(const Options& o, std::ostream& out) {
  const CellTable table = enumerate_J(CoxeterSystem::parse(o.type));
  if (o.json) {
    Json results = to_json(table);
    results["size"] = table.elements().size();
    emit(out, "cells", {{"type", o.type}}, std::move(results), {"two-sided cell J of elements with a unique reduced expression"});
    return;
  }
  out << render_cell_table(table) << "|J| = " << table.elements().size() << '\n';
}

void cmd_fibpoly(const Options& o, std::ostream& out) {
  const int i = o.index;
  const IntPolynomial f = fib_f(i), g = fib_g(i), fbar = fib_irreducible_factor(i);
  std::vector<std::pair<int, IntPolynomial>> factors;
  if (i >= 1) factors = divisor_factorization(i);
  if (o.json) {
    Json fac = Json::array();
    for (const auto& [d, p] : factors) fac.push_back({{"d", d}, {"fbar", to_json(p)}});
    Json results = {{"i", i}, {"f", to_json(f)}, {"g", to_json(g)}, {"fbar", to_json(fbar)},
                    {"factorization", std::move(fac)}, {"fg_relation", i < 1 || check_fg_relation(i)}};
    emit(out, "fibpoly", {{"i", i}}, std::move(results), {"disguised Fibonacci polynomials and their irreducible factors"});
    return;
  }
  out << "f_" << i << " = " << to_string(f) << '\n'
      << "g_" << i << " = " << to_string(g) << '\n'
      << "fbar_" << i << " = " << to_string(fbar) << '\n';
  if (factors.empty()) return;
  out << "f_" << i << " =";
  for (const auto& [d, p] : factors) out << " fbar_" << d;
  out << '\n';
  Rows rows;
  for (const auto& [d, p] : factors) rows.push_back({std::to_string(d), to_string(p)});
  out << render_table({"d", "fbar_d"}, rows);
}

Json matrix_spectrum(const IntMatrix& m) {
  Json j = {{"charpoly", to_json(charpoly(m))}, {"symmetric", is_symmetric(m)}};
  j["irreducible"] = has_negative_entry(m) ? Json(nullptr) : Json(is_irreducible_nonneg(m));
  if (is_symmetric(m)) {
    j["minpoly"] = to_json(minpoly_symmetric(m));
    j["spectrum_in_0_4"] = spectrum_in_range(m, Rational(0), Rational(4));
  }
  return j;
}

void print_spectrum(const std::string& prefix, const IntMatrix& m, std::ostream& out) {
  out << prefix << "charpoly: " << to_string(charpoly(m)) << '\n';
  if (is_symmetric(m)) out << prefix << "minpoly: " << to_string(minpoly_symmetric(m)) << '\n';
  out << prefix << "irreducible: "
      << (has_negative_entry(m) ? "n/a (negative entries)" : is_irreducible_nonneg(m) ? "yes" : "no") << '\n';
  if (is_symmetric(m))
    out << prefix << "spectrum in [0,4): " << (spectrum_in_range(m, Rational(0), Rational(4)) ? "yes" : "no") << '\n';
}

void cmd_matspec(const Options& o, std::ostream& out) {
  const IntMatrix m = read_matrix(o.file);
  if (o.json) {
    Json results;
    if (is_square(m)) {
      results = matrix_spectrum(m);
    } else {
      results["gram_left"] = matrix_spectrum(gram(m, Side::left));
      results["gram_right"] = matrix_spectrum(gram(m, Side::right));
    }
    results["matrix"] = to_json(m);
    emit(out, "matspec", {{"file", o.file}}, std::move(results), {"exact characteristic and minimal polynomials"});
    return;
  }
  out << render_matrix(m);
  if (is_square(m)) {
    print_spectrum("", m, out);
    return;
  }
  out << "X Xt:\n";
  print_spectrum("  ", gram(m, Side::left), out);
  out << "Xt X:\n";
  print_spectrum("  ", gram(m, Side::right), out);
}

Json class_json(const MatrixClass& c) {
  Json j = {{"class", to_string(c.kind)}, {"shape", {c.rows, c.cols}}, {"dynkin", c.dynkin},
            {"description", describe(c)}, {"transposed", c.transposed}};
  j["variant"] = c.variant ? Json(std::string(1, c.variant)) : Json(nullptr);
  return j;
}

void cmd_classify(const Options& o, std::ostream& out) {
  const IntMatrix m = read_matrix(o.file);
  const MatrixClass c = classify_under4(m);
  if (o.json) {
    Json results = class_json(c);
    results["canonical"] = to_json(canonical_form(m));
    emit(out, "classify-matrix", {{"file", o.file}}, std::move(results), {"classification of matrices with Gram spectrum below 4"});
    return;
  }
  out << render_matrix(m) << "class: " << describe(c) << '\n' << "canonical form:\n" << render_matrix(canonical_form(m));
}

void cmd_oracle(const Options& o, std::ostream& out) {
  const auto survivors = brute_force_under4(o.rows, o.cols, o.max_entry);
  Json list = Json::array();
  for (const auto& m : survivors) {
    const MatrixClass c = classify_under4(m);
    Json line = {{"matrix", to_json(m)}, {"class", to_string(c.kind)}, {"dynkin", c.dynkin}};
    if (o.json)
      list.push_back(std::move(line));
    else
      out << line.dump() << '\n';
  }
  if (o.json)
    emit(out, "oracle-under4", {{"rows", o.rows}, {"cols", o.cols}, {"max_entry", o.max_entry}},
         {{"count", survivors.size()}, {"survivors", std::move(list)}},
         {"exhaustive check of the classification of matrices with Gram spectrum below 4"});
}

void cmd_enumerate_b(const Options& o, std::ostream& out) {
  const auto candidates = enumerate_B(o.n);
  if (o.json) {
    Json list = Json::array();
    for (const auto& c : candidates) {
      Json j = class_json(c.cls);
      j["matrix"] = to_json(c.matrix);
      j["canonical"] = to_json(c.canonical);
      j["side"] = c.side;
      j["hypothetical"] = c.hypothetical;
      list.push_back(std::move(j));
    }
    emit(out, "enumerate-b", {{"n", o.n}}, std::move(list), {"candidate B matrices for the dihedral small quotient"});
    return;
  }
  Rows rows;
  int k = 0;
  for (const auto& c : candidates)
    rows.push_back({std::to_string(++k), describe(c.cls), c.side, c.hypothetical ? "yes" : "no", to_string(c.matrix)});
  out << render_table({"#", "class", "side", "hypothetical", "B"}, rows);
}

void cmd_dihedral_table(const Options& o, std::ostream& out) {
  const StructureConstants sc = structure_constants(o.n);
  Json basis = Json::array();
  for (const auto& w : sc.basis) basis.push_back(w.empty() ? "" : word_to_string(w, 2));
  if (!o.module.empty()) {
    if (o.module != "s" && o.module != "t") throw Error(Errc::precondition, "module side must be s or t");
    const auto action = cell_module_matrices(sc, o.module == "s" ? DihedralSide::s : DihedralSide::t);
    if (o.json) {
      Json list = Json::array();
      for (const auto& m : action) list.push_back(to_json(m));
      emit(out, "dihedral-table", {{"n", o.n}, {"module", o.module}},
           {{"dim", action.front().rows()}, {"action", std::move(list)}, {"basis", std::move(basis)}},
           {"cell module of the dihedral small quotient"});
      return;
    }
    for (std::size_t i = 0; i < action.size(); ++i)
      out << "theta_" << word_label(sc.basis[i], 2) << ":\n" << render_matrix(action[i]);
    return;
  }
  const BasedAlgebra algebra = BasedAlgebra::from(sc);
  if (o.json) {
    Json results = to_json(algebra);
    results["basis"] = std::move(basis);
    emit(out, "dihedral-table", {{"n", o.n}}, std::move(results), {"structure constants of the dihedral small quotient"});
    return;
  }
  for (std::size_t x = 0; x < sc.dim(); ++x)
    for (std::size_t y = 0; y < sc.dim(); ++y) {
      out << word_label(sc.basis[x], 2) << " * " << word_label(sc.basis[y], 2) << " =";
      bool any = false;
      for (std::size_t z = 0; z < sc.dim(); ++z) {
        const long long g = sc.gamma[x][y][z];
        if (g == 0) continue;
        out << (any ? " + " : " ");
        if (g != 1) out << g << ' ';
        out << word_label(sc.basis[z], 2);
        any = true;
      }
      out << (any ? "" : " 0") << '\n';
    }
}

std::string quiver_label(const IntMatrix& m) {
  try {
    return dynkin_type(from_m_matrix(m));
  } catch (const Error&) {
    return "NotSimplyLacedDynkin";
  }
}

Json candidate_json(const AssemblyCandidate& c) {
  Json edges = Json::array();
  for (const auto& e : edge_certificates(c))
    edges.push_back({{"first", e.first + 1}, {"second", e.second + 1}, {"m", e.m},
                     {"first_objects", index_list(e.first_objects)}, {"second_objects", index_list(e.second_objects)}});
  return {{"M", to_json(c.M)}, {"size", c.M.rows()}, {"assignment", index_list(c.assignment)},
          {"edges", std::move(edges)}, {"dynkin", quiver_label(c.M)}};
}

void print_candidate(const AssemblyCandidate& c, std::ostream& out) {
  out << render_matrix(c.M) << "generators:";
  for (int g : c.assignment) out << ' ' << g + 1;
  out << '\n';
  for (const auto& e : edge_certificates(c))
    out << "edge " << e.first + 1 << '-' << e.second + 1 << " (m=" << e.m << "): objects {"
        << join(e.first_objects, ",") << "} | {" << join(e.second_objects, ",") << "}\n";
  out << "quiver: " << quiver_label(c.M) << '\n';
}

std::vector<int> parse_assignment(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(v - 1);
    } catch (const std::logic_error&) {
      throw Error(Errc::parse, "bad generator label '" + item + "' in assignment");
    }
  }
  return out;
}

void cmd_verify_rank3(const Options& o, std::ostream& out) {
  const CoxeterSystem system = CoxeterSystem::parse(o.type);
  AssemblyOptions options;
  options.require_size_multiple = o.size_multiple;
  const std::vector<std::string> anchors{"principal matrices glued from rank-two blocks"};
  if (!o.matrix_file.empty()) {
    if (o.assignment.empty()) throw Error(Errc::precondition, "--matrix needs --assignment");
    AssemblyCandidate c{system, parse_assignment(o.assignment), read_matrix(o.matrix_file)};
    const bool ok = verify_assembly(c, options);
    if (o.json) {
      Json results = {{"verified", ok}};
      if (ok) results["candidate"] = candidate_json(c);
      emit(out, "verify-rank3", {{"type", o.type}, {"matrix", o.matrix_file}, {"assignment", o.assignment}},
           std::move(results), anchors);
      return;
    }
    out << "verified: " << (ok ? "yes" : "no") << '\n';
    if (ok) print_candidate(c, out);
    return;
  }
  const auto found = assembly_search(system, o.max_size, options);
  if (o.json) {
    Json list = Json::array();
    for (const auto& c : found) list.push_back(candidate_json(c));
    emit(out, "verify-rank3", {{"type", o.type}, {"max_size", o.max_size}, {"size_multiple", o.size_multiple}},
         {{"count", found.size()}, {"candidates", std::move(list)}}, anchors);
    return;
  }
  out << found.size() << " matrices up to size " << o.max_size << " for " << system.name() << '\n';
  for (std::size_t k = 0; k < found.size(); ++k) {
    out << "\ncandidate " << k + 1 << " (" << found[k].M.rows() << " objects)\n";
    print_candidate(found[k], out);
  }
}

void cmd_special(const Options& o, std::ostream& out) {
  const CoxeterSystem system = CoxeterSystem::parse(o.type);
  const SpecialModule sm = special_module_matrices(system);
  const SharedEigenvalue ev = shared_top_eigenvalue(system, o.tol);
  Json basis = Json::array();
  for (const auto& w : sm.cell_basis) basis.push_back(word_to_string(w, system.rank()));
  Json vsign = Json::array();
  for (Eigen::Index i = 0; i < sm.vsign_matrix.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < sm.vsign_matrix.cols(); ++j) row.push_back(sm.vsign_matrix(i, j).to_string());
    vsign.push_back(std::move(row));
  }
  if (o.json) {
    emit(out, "special", {{"type", o.type}, {"tol", o.tol}},
         {{"cell_basis", std::move(basis)}, {"cell_matrix", to_json(sm.cell_matrix)}, {"vsign_matrix", std::move(vsign)},
          {"eigenvalue", ev.value}, {"cell_eigenvalue", ev.cell_eigenvalue},
          {"vsign_eigenvalue", ev.vsign_eigenvalue}, {"residual", ev.residual}},
         {"special module V tensor sign and the Perron-Frobenius eigenvalue"});
    return;
  }
  out << "left cell:";
  for (const auto& w : basis) out << ' ' << w.get<std::string>();
  out << "\ncell module:\n" << render_matrix(sm.cell_matrix) << "V tensor sign:\n";
  Rows rows;
  for (const auto& r : vsign) {
    rows.emplace_back();
    for (const auto& c : r) rows.back().push_back(c.get<std::string>());
  }
  out << render_table({}, rows) << std::setprecision(12) << "top eigenvalue: " << ev.value
      << "\n  cell module: " << ev.cell_eigenvalue << "\n  V tensor sign: " << ev.vsign_eigenvalue << '\n';
}

void cmd_quiver(const Options& o, std::ostream& out) {
  std::vector<IntMatrix> ms;
  if (std::filesystem::exists(o.type)) {
    ms.push_back(read_matrix(o.type));
  } else {
    const CoxeterSystem system = CoxeterSystem::parse(o.type);
    if (system.rank() == 2) {
      const int m = system.m(0, 1);
      ms.push_back((m % 2 == 0 ? cell_rep_B(m, DihedralSide::s) : cell_rep_B_odd(m)).M());
    } else {
      for (const auto& c : assembly_search(system, o.max_size)) ms.push_back(c.M);
    }
  }
  Json list = Json::array();
  for (const auto& m : ms) {
    const ZigzagAlgebra z = from_m_matrix(m);
    const std::string dynkin = dynkin_type(z);
    Json edges = Json::array();
    for (const auto& [a, b] : z.edges()) edges.push_back({a + 1, b + 1});
    Json loewy = Json::array();
    Rows rows;
    for (int v = 0; v < z.vertices(); ++v) {
      const LoewyLayers l = loewy_layers(z, v);
      loewy.push_back({{"vertex", v + 1}, {"top", index_list(l.top)}, {"middle", index_list(l.middle)},
                       {"socle", index_list(l.socle)}});
      rows.push_back({std::to_string(v + 1), join(l.top), join(l.middle), join(l.socle)});
    }
    if (o.json) {
      list.push_back({{"M", to_json(m)}, {"adjacency", to_json(z.adjacency())}, {"cartan", to_json(cartan_matrix(z))},
                      {"vertices", z.vertices()}, {"edges", std::move(edges)}, {"loewy", std::move(loewy)},
                      {"dynkin", dynkin}});
      continue;
    }
    out << "adjacency:\n" << render_matrix(z.adjacency()) << "Cartan matrix:\n" << render_matrix(cartan_matrix(z))
        << "Loewy layers of the projectives:\n" << render_table({"vertex", "top", "middle", "socle"}, rows)
        << "Dynkin type: " << dynkin << "\n\n";
  }
  if (o.json)
    emit(out, "quiver", {{"input", o.type}, {"max_size", o.max_size}}, {{"quivers", std::move(list)}},
         {"zigzag algebra whose Cartan matrix is M"});
}

struct LoadedAlgebra {
  BasedAlgebra algebra;
  std::vector<std::string> labels;
};

LoadedAlgebra load_algebra(const std::string& path) {
  const Json j = payload(read_json_file(path));
  BasedAlgebra algebra = algebra_from_json(j);
  std::vector<std::string> labels;
  if (j.contains("basis") && j.at("basis").size() == algebra.dim()) {
    for (const auto& b : j.at("basis")) {
      const auto s = b.is_string() ? b.get<std::string>() : b.dump();
      labels.push_back(s.empty() ? "e" : s);
    }
  } else {
    for (std::size_t i = 0; i < algebra.dim(); ++i) labels.push_back("a" + std::to_string(i));
  }
  return {std::move(algebra), std::move(labels)};
}

std::string cell_string(const std::vector<std::size_t>& cell, const std::vector<std::string>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < cell.size(); ++i) s += (i ? ", " : "") + labels[cell[i]];
  return s + "}";
}

void cmd_cells_of_algebra(const Options& o, std::ostream& out) {
  const LoadedAlgebra loaded = load_algebra(o.file);
  std::vector<std::pair<std::string, CellSide>> sides;
  if (o.side == "left" || o.side == "all") sides.emplace_back("left", CellSide::left);
  if (o.side == "right" || o.side == "all") sides.emplace_back("right", CellSide::right);
  if (o.side == "two-sided" || o.side == "all") sides.emplace_back("two-sided", CellSide::two_sided);
  Json results = Json::object();
  for (const auto& [name, side] : sides) {
    const CellPartition p = cells(loaded.algebra, side);
    Json order = Json::array();
    for (std::size_t a = 0; a < p.cells.size(); ++a)
      for (std::size_t b = 0; b < p.cells.size(); ++b)
        if (a != b && p.geq[a][b]) order.push_back({a, b});
    if (o.json) {
      results[name] = {{"cells", p.cells}, {"geq", std::move(order)}};
      continue;
    }
    out << name << " cells:\n";
    for (std::size_t k = 0; k < p.cells.size(); ++k)
      out << "  C" << k + 1 << " = " << cell_string(p.cells[k], loaded.labels) << '\n';
    for (const auto& pair : order) out << "  C" << pair[0].get<int>() + 1 << " >= C" << pair[1].get<int>() + 1 << '\n';
  }
  if (o.json) emit(out, "cells-of-algebra", {{"file", o.file}, {"side", o.side}}, std::move(results), {"cells of a positively based algebra"});
}

void cmd_apex(const Options& o, std::ostream& out) {
  const LoadedAlgebra loaded = load_algebra(o.file);
  const BasedModule module = module_from_json(loaded.algebra, payload(read_json_file(o.file2)));
  const bool transitive = is_transitive(module);
  const auto top = apex(module);
  const PerronFrobenius pf = special_vector(module, o.tol);
  if (o.json) {
    Json labels = Json::array();
    for (auto i : top) labels.push_back(loaded.labels[i]);
    emit(out, "apex", {{"algebra", o.file}, {"module", o.file2}},
         {{"transitive", transitive}, {"apex", top}, {"apex_labels", std::move(labels)},
          {"special_eigenvalue", pf.eigenvalue},
          {"special_vector", std::vector<double>(pf.vector.data(), pf.vector.data() + pf.vector.size())}},
         {"apex of a transitive based module"});
    return;
  }
  out << "transitive: " << (transitive ? "yes" : "no") << '\n'
      << "apex: " << cell_string(top, loaded.labels) << '\n'
      << std::setprecision(12) << "Perron-Frobenius eigenvalue: " << pf.eigenvalue << '\n'
      << "special vector:";
  for (Eigen::Index i = 0; i < pf.vector.size(); ++i) out << ' ' << pf.vector(i);
  out << '\n';
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact cell data for Coxeter groups with few cells: Fibonacci polynomials, "
               "Gram spectrum classification, dihedral and higher-rank matrices."};
  app.name("smallquot");
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print one JSON report instead of tables");

  auto* cells = app.add_subcommand("cells", "Cell table of J, the elements with a unique reduced expression");
  cells->add_option("type", o.type, "Coxeter type token: A3, B4, D5, F4, H3, H4, I2_7")->required();

  auto* fib = app.add_subcommand("fibpoly", "f_i, g_i, the irreducible factor fbar_i and the divisor factorization");
  fib->add_option("i", o.index, "Index i >= 0")->required();

  auto* matspec = app.add_subcommand("matspec", "Characteristic and minimal polynomial, irreducibility, spectrum in [0,4)");
  matspec->add_option("file", o.file, "Matrix JSON {\"rows\",\"cols\",\"entries\"}")->required();

  auto* classify = app.add_subcommand("classify-matrix", "Staircase, extended staircase or exceptional class of a matrix");
  classify->add_option("file", o.file, "Matrix JSON")->required();

  auto* oracle = app.add_subcommand("oracle-under4", "Brute-force survivors of the Gram spectrum test, one JSON line each");
  oracle->add_option("rows", o.rows, "Maximum number of rows")->required();
  oracle->add_option("cols", o.cols, "Maximum number of columns")->required();
  oracle->add_option("--max-entry", o.max_entry, "Largest entry tried (default 1)");

  auto* enumb = app.add_subcommand("enumerate-b", "Candidate B matrices of a dihedral small quotient I2(n)");
  enumb->add_option("n", o.n, "Dihedral parameter n >= 3")->required();

  auto* table = app.add_subcommand("dihedral-table", "Structure constants of the dihedral small quotient");
  table->add_option("n", o.n, "Dihedral parameter n >= 3")->required();
  table->add_option("--module", o.module, "Print the cell module of side s or t instead");

  auto* rank3 = app.add_subcommand("verify-rank3", "Principal matrices M glued from rank-two blocks");
  rank3->add_option("type", o.type, "Coxeter type token, e.g. H3, H4, F4, B3")->required();
  rank3->add_option("--max-size", o.max_size, "Largest number of objects searched (default 12)");
  rank3->add_flag("--size-multiple", o.size_multiple, "Keep only sizes divisible by the rank");
  rank3->add_option("--matrix", o.matrix_file, "Verify this M instead of searching");
  rank3->add_option("--assignment", o.assignment, "Generator label of each object of --matrix, e.g. 1,1,2,3");

  auto* special = app.add_subcommand("special", "Cell module versus V tensor sign and their shared top eigenvalue");
  special->add_option("type", o.type, "H3 or H4")->required();
  special->add_option("--tol", o.tol, "Eigenvalue agreement tolerance (default 1e-9)");

  auto* quiver = app.add_subcommand("quiver", "Zigzag quiver, Cartan matrix, Loewy layers and Dynkin label");
  quiver->add_option("input", o.type, "Coxeter type token or matrix JSON file")->required();
  quiver->add_option("--max-size", o.max_size, "Largest M searched for rank >= 3 (default 12)");

  auto* coa = app.add_subcommand("cells-of-algebra", "Left, right and two-sided cells of a based algebra");
  coa->add_option("file", o.file, "Algebra JSON {\"dim\",\"gamma\",\"identity\"}")->required();
  coa->add_option("--side", o.side, "left, right, two-sided or all")
      ->check(CLI::IsMember({"left", "right", "two-sided", "all"}));

  auto* apex_cmd = app.add_subcommand("apex", "Transitivity, apex and special vector of a based module");
  apex_cmd->add_option("algebra", o.file, "Algebra JSON")->required();
  apex_cmd->add_option("module", o.file2, "Module JSON {\"action\": [matrix, ...]}")->required();
  apex_cmd->add_option("--tol", o.tol, "Power iteration tolerance (default 1e-9)");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", o.json, "Print one JSON report instead of tables");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << one_line(e.what()) << '\n';
    return 2;
  }

  try {
    if (cells->parsed()) cmd_cells(o, out);
    else if (fib->parsed()) cmd_fibpoly(o, out);
    else if (matspec->parsed()) cmd_matspec(o, out);
    else if (classify->parsed()) cmd_classify(o, out);
    else if (oracle->parsed()) cmd_oracle(o, out);
    else if (enumb->parsed()) cmd_enumerate_b(o, out);
    else if (table->parsed()) cmd_dihedral_table(o, out);
    else if (rank3->parsed()) cmd_verify_rank3(o, out);
    else if (special->parsed()) cmd_special(o, out);
    else if (quiver->parsed()) cmd_quiver(o, out);
    else if (coa->parsed()) cmd_cells_of_algebra(o, out);
    else if (apex_cmd->parsed()) cmd_apex(o, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << one_line(e.what()) << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: parse: " << one_line(e.what()) << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << '\n';
    return 1;
  }
  return 0;
}

}  // namespace smallquot::cli
