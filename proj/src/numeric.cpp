#include "smallquot/numeric.hpp"

#include <sstream>

namespace smallquot {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::precondition: return "precondition";
    case Errc::shape: return "shape";
    case Errc::negative_entry: return "negative_entry";
    case Errc::not_symmetric: return "not_symmetric";
    case Errc::reducible: return "reducible";
    case Errc::spectrum_out_of_range: return "spectrum_out_of_range";
    case Errc::inconsistent: return "inconsistent";
    case Errc::unsupported: return "unsupported";
    case Errc::bound_exceeded: return "bound_exceeded";
    case Errc::parse: return "parse";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c) {
      throw Error(Errc::shape, "ragged matrix literal");
    }
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix identity(Eigen::Index n) {
  IntMatrix m = zero_matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = 0;
  return m;
}

bool is_zero(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

bool is_square(const IntMatrix& m) { return m.rows() == m.cols(); }

bool is_symmetric(const IntMatrix& m) {
  if (!is_square(m)) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool has_negative_entry(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) return true;
  return false;
}

BigInt max_entry(const IntMatrix& m) {
  BigInt best = m.size() ? m(0, 0) : BigInt(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) > best) best = m(i, j);
  return best;
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

bool equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out << ',';
    out << '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::vector<std::vector<long long>> to_nested(const IntMatrix& m) {
  std::vector<std::vector<long long>> rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      rows[static_cast<std::size_t>(i)].push_back(m(i, j).convert_to<long long>());
  return rows;
}

Eigen::MatrixXd to_double(const IntMatrix& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).convert_to<double>();
  return d;
}

Eigen::MatrixXd to_double(const RatMatrix& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).convert_to<double>();
  return d;
}

IntMatrix permute_symmetric(const IntMatrix& m, const std::vector<int>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  IntMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(perm[i], perm[j]);
  return out;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix out = zero_matrix(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

}  // namespace smallquot
