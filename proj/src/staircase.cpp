#include "smallquot/staircase.hpp"

#include "smallquot/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace smallquot {

const char* to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Staircase: return "Staircase";
    case MatrixKind::ExtendedStaircase: return "ExtendedStaircase";
    case MatrixKind::X1: return "X1";
    case MatrixKind::X2: return "X2";
    case MatrixKind::X3: return "X3";
    case MatrixKind::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

std::string describe(const MatrixClass& c) {
  std::ostringstream out;
  out << to_string(c.kind);
  if (c.transposed) out << "^t";
  out << '(' << c.rows << 'x' << c.cols << ')';
  if (!c.dynkin.empty()) out << ' ' << c.dynkin;
  return out.str();
}

IntMatrix make_staircase(int rows, int cols) {
  if (rows < 1 || cols < 1 || std::abs(rows - cols) > 1)
    throw Error(Errc::shape, "staircase shape must be k x k, k x (k+1) or (k+1) x k");
  if (rows > cols) return make_staircase(cols, rows).transpose();
  IntMatrix m = zero_matrix(rows, cols);
  for (int i = 0; i < rows; ++i) {
    m(i, i) = 1;
    if (i + 1 < cols) m(i, i + 1) = 1;
  }
  return m;
}

namespace {

IntMatrix with_leading_column(const IntMatrix& base) {
  IntMatrix m = zero_matrix(base.rows(), base.cols() + 1);
  m.rightCols(base.cols()) = base;
  m(0, 0) = 1;
  return m;
}

}  // namespace

IntMatrix make_extended_staircase(int base_rows, int base_cols, Extension extension) {
  const IntMatrix base = make_staircase(base_rows, base_cols);
  if (base_rows == base_cols) {
    if (extension == Extension::column) return with_leading_column(base);
    IntMatrix m = zero_matrix(base_rows + 1, base_cols);
    m.topRows(base_rows) = base;
    m(base_rows, base_cols - 1) = 1;
    return m;
  }
  if (base_cols == base_rows + 1 && extension == Extension::column) return with_leading_column(base);
  if (base_rows == base_cols + 1 && extension == Extension::row)
    return with_leading_column(base.transpose()).transpose();
  throw Error(Errc::shape, "extension direction does not match the staircase shape");
}

IntMatrix exceptional(int which) {
  switch (which) {
    case 1: return int_matrix({{1, 0, 0}, {1, 1, 1}, {0, 0, 1}});
    case 2: return int_matrix({{1, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 0, 1}});
    case 3: return int_matrix({{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 0, 1}});
    default: throw Error(Errc::precondition, "exceptional matrices are X1, X2, X3");
  }
}

namespace {

struct Canonizer {
  int rows, cols;
  std::vector<long long> x;  // row-major input
  std::vector<long long> best;
  bool have_best = false;
  std::vector<long long> current;
  std::vector<char> used;

  long long at(int r, int c) const { return x[static_cast<std::size_t>(r * cols + c)]; }

  // Arrange the columns of each cell by the values of row r.
  std::vector<std::vector<int>> refine(const std::vector<std::vector<int>>& cells, int r,
                                       std::vector<long long>& row) const {
    std::vector<std::vector<int>> out;
    row.clear();
    for (const auto& cell : cells) {
      std::vector<int> sorted = cell;
      std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) { return at(r, a) < at(r, b); });
      std::size_t i = 0;
      while (i < sorted.size()) {
        std::size_t j = i;
        std::vector<int> piece;
        while (j < sorted.size() && at(r, sorted[j]) == at(r, sorted[i])) {
          piece.push_back(sorted[j]);
          row.push_back(at(r, sorted[j]));
          ++j;
        }
        out.push_back(std::move(piece));
        i = j;
      }
    }
    return out;
  }

  void search(int depth, const std::vector<std::vector<int>>& cells, bool tied) {
    if (depth == rows) {
      best = current;
      have_best = true;
      return;
    }
    std::vector<long long> row, min_row;
    std::vector<int> candidates;
    for (int r = 0; r < rows; ++r) {
      if (used[r]) continue;
      refine(cells, r, row);
      if (candidates.empty() || row < min_row) {
        min_row = row;
        candidates = {r};
      } else if (row == min_row) {
        candidates.push_back(r);
      }
    }
    const auto offset = static_cast<std::ptrdiff_t>(depth) * cols;
    if (tied && have_best) {
      const auto cmp = std::lexicographical_compare_three_way(min_row.begin(), min_row.end(), best.begin() + offset,
                                                              best.begin() + offset + cols);
      if (cmp > 0) return;
      if (cmp < 0) tied = false;
    }
    std::vector<std::vector<long long>> tried;
    for (int r : candidates) {
      std::vector<long long> original(x.begin() + r * cols, x.begin() + (r + 1) * cols);
      if (std::find(tried.begin(), tried.end(), original) != tried.end()) continue;
      tried.push_back(original);
      auto next = refine(cells, r, row);
      std::copy(row.begin(), row.end(), current.begin() + offset);
      used[r] = 1;
      search(depth + 1, next, tied && have_best);
      used[r] = 0;
      // A strictly better branch sets the new best; later siblings compare against it.
      tied = true;
    }
  }
};

}  // namespace

IntMatrix canonical_form(const IntMatrix& x) {
  if (x.size() == 0) return x;
  Canonizer c;
  c.rows = static_cast<int>(x.rows());
  c.cols = static_cast<int>(x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) c.x.push_back(x(i, j).convert_to<long long>());
  c.current.assign(c.x.size(), 0);
  c.used.assign(static_cast<std::size_t>(c.rows), 0);
  std::vector<int> all(static_cast<std::size_t>(c.cols));
  for (int j = 0; j < c.cols; ++j) all[static_cast<std::size_t>(j)] = j;
  c.search(0, {all}, true);
  IntMatrix out(x.rows(), x.cols());
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j) out(i, j) = c.best[static_cast<std::size_t>(i * c.cols + j)];
  return out;
}

bool satisfies_under4(const IntMatrix& x) {
  if (x.size() == 0 || has_negative_entry(x)) return false;
  const IntMatrix left = gram(x, Side::left), right = gram(x, Side::right);
  if (!is_irreducible_nonneg(left) || !is_irreducible_nonneg(right)) return false;
  // The two Gram matrices share their non-zero spectrum; test the smaller one.
  return spectrum_in_range(left.rows() <= right.rows() ? left : right, Rational(0), Rational(4));
}

namespace {

std::string dynkin_for(MatrixKind kind, int rows, int cols) {
  switch (kind) {
    case MatrixKind::Staircase: return "A" + std::to_string(rows + cols);
    case MatrixKind::ExtendedStaircase: return "D" + std::to_string(rows + cols);
    case MatrixKind::X1: return "E6";
    case MatrixKind::X2: return "E7";
    case MatrixKind::X3: return "E8";
    default: return "";
  }
}

MatrixClass make_class(MatrixKind kind, int rows, int cols, char variant = 0, bool transposed = false) {
  return {kind, rows, cols, variant, transposed, dynkin_for(kind, rows, cols)};
}

}  // namespace

std::vector<std::pair<MatrixClass, IntMatrix>> classification_universe(int rows, int cols) {
  std::vector<std::pair<MatrixClass, IntMatrix>> out;
  if (rows < 1 || cols < 1) return out;
  if (std::abs(rows - cols) <= 1) out.emplace_back(make_class(MatrixKind::Staircase, rows, cols), make_staircase(rows, cols));
  auto extended = [&](char variant, IntMatrix m) {
    out.emplace_back(make_class(MatrixKind::ExtendedStaircase, rows, cols, variant), std::move(m));
  };
  // Square bases start at k = 2; for k = 1 they coincide with staircases.
  if (cols == rows + 1 && rows >= 2) {
    extended('a', make_extended_staircase(rows, rows, Extension::column));
    extended('B', make_extended_staircase(rows, rows, Extension::row).transpose());
  }
  if (rows == cols + 1 && cols >= 2) {
    extended('b', make_extended_staircase(cols, cols, Extension::row));
    extended('A', make_extended_staircase(cols, cols, Extension::column).transpose());
  }
  if (cols == rows + 2) extended('c', make_extended_staircase(rows, rows + 1, Extension::column));
  if (rows == cols + 2) extended('C', make_extended_staircase(cols + 1, cols, Extension::row));
  const MatrixKind kinds[] = {MatrixKind::X1, MatrixKind::X2, MatrixKind::X3};
  for (int which = 1; which <= 3; ++which) {
    const IntMatrix x = exceptional(which);
    if (x.rows() == rows && x.cols() == cols) out.emplace_back(make_class(kinds[which - 1], rows, cols), x);
    if (x.cols() == rows && x.rows() == cols)
      out.emplace_back(make_class(kinds[which - 1], rows, cols, 0, true), x.transpose());
  }
  return out;
}

MatrixClass classify_under4(const IntMatrix& x) {
  if (x.size() == 0) throw Error(Errc::shape, "empty matrix");
  if (has_negative_entry(x)) throw Error(Errc::negative_entry, "matrix has a negative entry");
  const IntMatrix left = gram(x, Side::left), right = gram(x, Side::right);
  if (!is_irreducible_nonneg(left) || !is_irreducible_nonneg(right))
    throw Error(Errc::reducible, "a Gram matrix is reducible");
  if (!spectrum_in_range(left.rows() <= right.rows() ? left : right, Rational(0), Rational(4)))
    throw Error(Errc::spectrum_out_of_range, "Gram spectrum is not contained in [0,4)");
  if (max_entry(x) >= 2) throw Error(Errc::inconsistent, "entry >= 2 despite a Gram spectrum below 4");
  const IntMatrix canon = canonical_form(x);
  const int rows = static_cast<int>(x.rows()), cols = static_cast<int>(x.cols());
  for (const auto& [cls, m] : classification_universe(rows, cols))
    if (equal(canonical_form(m), canon)) return cls;
  return make_class(MatrixKind::Unclassified, rows, cols);
}

std::vector<IntMatrix> brute_force_under4(int max_rows, int max_cols, int max_entry) {
  if (max_rows < 1 || max_cols < 1 || max_entry < 0) throw Error(Errc::precondition, "bounds must be positive");
  if (max_rows * max_cols > 20) throw Error(Errc::bound_exceeded, "shape bound exceeds rows*cols <= 20");
  std::vector<IntMatrix> found;
  const int base = max_entry + 1;
  for (int r = 1; r <= max_rows; ++r)
    for (int c = 1; c <= max_cols; ++c) {
      const int cells = r * c;
      std::vector<int> digits(static_cast<std::size_t>(cells), 0);
      IntMatrix m = zero_matrix(r, c);
      for (;;) {
        // Cheap necessary condition: no zero row or column.
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
          bool any = false;
          for (int j = 0; j < c; ++j) any |= digits[static_cast<std::size_t>(i * c + j)] != 0;
          ok = any;
        }
        for (int j = 0; j < c && ok; ++j) {
          bool any = false;
          for (int i = 0; i < r; ++i) any |= digits[static_cast<std::size_t>(i * c + j)] != 0;
          ok = any;
        }
        if (ok) {
          for (int k = 0; k < cells; ++k) m(k / c, k % c) = digits[static_cast<std::size_t>(k)];
          if (satisfies_under4(m)) found.push_back(canonical_form(m));
        }
        int k = 0;
        while (k < cells && ++digits[static_cast<std::size_t>(k)] == base) digits[static_cast<std::size_t>(k++)] = 0;
        if (k == cells) break;
      }
    }
  std::sort(found.begin(), found.end(), lex_less);
  found.erase(std::unique(found.begin(), found.end(), [](const IntMatrix& a, const IntMatrix& b) { return equal(a, b); }),
              found.end());
  return found;
}

}  // namespace smallquot
