#include "smallquot/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace smallquot {

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

Json to_json(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

Json to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const RatMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const CellTable& table) {
  Json elements = Json::array();
  const int rank = table.system().rank();
  for (const auto& w : table.elements())
    elements.push_back({{"word", word_to_string(w, rank)},
                        {"left", CellTable::left_cell_of(w) + 1},
                        {"right", CellTable::right_cell_of(w) + 1}});
  return {{"type", table.system().name()}, {"elements", std::move(elements)}};
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
      throw Error(Errc::parse, "bad integer '" + s + "'");
    return BigInt(s);
  }
  throw Error(Errc::parse, "expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(bigint_from_json(s));
    const BigInt den = bigint_from_json(s.substr(slash + 1));
    if (den == 0) throw Error(Errc::parse, "zero denominator in '" + s + "'");
    return Rational(bigint_from_json(s.substr(0, slash)), den);
  }
  throw Error(Errc::parse, "expected a rational, got " + j.dump());
}

namespace {

template <typename Scalar, typename Convert>
Matrix<Scalar> matrix_from_json(const Json& j, Convert convert) {
  const Json& entries = j.is_object() ? j.at("entries") : j;
  if (!entries.is_array() || entries.empty()) throw Error(Errc::parse, "matrix entries must be a non-empty array");
  const auto rows = static_cast<Eigen::Index>(entries.size());
  if (!entries[0].is_array() || entries[0].empty()) throw Error(Errc::parse, "matrix rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(entries[0].size());
  Matrix<Scalar> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error(Errc::parse, "matrix row " + std::to_string(i + 1) + " has the wrong length");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = convert(row[static_cast<std::size_t>(c)]);
  }
  if (j.is_object()) {
    if ((j.contains("rows") && j.at("rows").get<long long>() != rows) ||
        (j.contains("cols") && j.at("cols").get<long long>() != cols))
      throw Error(Errc::parse, "declared matrix shape does not match its entries");
  }
  return m;
}

}  // namespace

IntMatrix int_matrix_from_json(const Json& j) { return matrix_from_json<BigInt>(j, bigint_from_json); }
RatMatrix rat_matrix_from_json(const Json& j) { return matrix_from_json<Rational>(j, rational_from_json); }

Json to_json(const BasedAlgebra& algebra) {
  Json gamma = Json::array();
  for (const auto& plane : algebra.tensor()) {
    Json p = Json::array();
    for (const auto& line : plane) {
      Json l = Json::array();
      for (const auto& g : line) l.push_back(to_json(g));
      p.push_back(std::move(l));
    }
    gamma.push_back(std::move(p));
  }
  Json out = {{"dim", algebra.dim()}, {"gamma", std::move(gamma)}};
  if (algebra.identity_index()) out["identity"] = *algebra.identity_index();
  return out;
}

BasedAlgebra algebra_from_json(const Json& j) {
  try {
    const Json& g = j.at("gamma");
    const auto n = j.contains("dim") ? j.at("dim").get<std::size_t>() : g.size();
    if (g.size() != n) throw Error(Errc::parse, "gamma does not have dim planes");
    Tensor3 gamma(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (std::size_t a = 0; a < n; ++a) {
      if (g[a].size() != n) throw Error(Errc::parse, "gamma plane has the wrong size");
      for (std::size_t b = 0; b < n; ++b) {
        if (g[a][b].size() != n) throw Error(Errc::parse, "gamma line has the wrong size");
        for (std::size_t c = 0; c < n; ++c) gamma[a][b][c] = rational_from_json(g[a][b][c]);
      }
    }
    std::optional<std::size_t> identity;
    if (j.contains("identity") && !j.at("identity").is_null()) identity = j.at("identity").get<std::size_t>();
    return BasedAlgebra(std::move(gamma), identity);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("malformed algebra: ") + e.what());
  }
}

BasedModule module_from_json(const BasedAlgebra& algebra, const Json& j) {
  try {
    std::vector<RatMatrix> action;
    for (const auto& m : j.at("action")) action.push_back(rat_matrix_from_json(m));
    return BasedModule(algebra, std::move(action));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("malformed module: ") + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse, "JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json(buffer.str());
  } catch (const Error& e) {
    throw Error(Errc::parse, path + ": " + e.what());
  }
}

}  // namespace smallquot
