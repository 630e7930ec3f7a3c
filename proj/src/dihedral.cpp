#include "smallquot/dihedral.hpp"

#include "smallquot/fibpoly.hpp"
#include "smallquot/intmat.hpp"

#include <map>

namespace smallquot {

const char* to_string(DihedralSide side) { return side == DihedralSide::s ? "s" : "t"; }

DihedralRep::DihedralRep(int n, IntMatrix b) : n_(n), b_(std::move(b)) {
  if (n_ < 3) throw Error(Errc::precondition, "dihedral type needs n >= 3");
  if (b_.size() == 0 || is_zero(b_)) throw Error(Errc::precondition, "B must be non-zero");
  if (has_negative_entry(b_)) throw Error(Errc::negative_entry, "B must be non-negative");
  if (!is_irreducible_nonneg(gram(b_, Side::left)) || !is_irreducible_nonneg(gram(b_, Side::right)))
    throw Error(Errc::reducible, "both Gram matrices of B must be irreducible");
}

IntMatrix DihedralRep::theta_s() const {
  IntMatrix m = zero_matrix(size(), size());
  m.topLeftCorner(s_objects(), s_objects()) = 2 * identity(s_objects());
  m.topRightCorner(s_objects(), t_objects()) = b_;
  return m;
}

IntMatrix DihedralRep::theta_t() const {
  IntMatrix m = zero_matrix(size(), size());
  m.bottomLeftCorner(t_objects(), s_objects()) = b_.transpose();
  m.bottomRightCorner(t_objects(), t_objects()) = 2 * identity(t_objects());
  return m;
}

namespace {

IntPolynomial drop_x(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  if (f.coeff(0) != 0) throw Error(Errc::internal, "expected zero constant term");
  return IntPolynomial(std::vector<BigInt>(f.coeffs().begin() + 1, f.coeffs().end()));
}

IntMatrix place(const DihedralRep& rep, const IntMatrix& ss, const IntMatrix& st, const IntMatrix& ts,
                const IntMatrix& tt) {
  const auto a = rep.s_objects(), b = rep.t_objects();
  IntMatrix m = zero_matrix(a + b, a + b);
  if (ss.size()) m.topLeftCorner(a, a) = ss;
  if (st.size()) m.topRightCorner(a, b) = st;
  if (ts.size()) m.bottomLeftCorner(b, a) = ts;
  if (tt.size()) m.bottomRightCorner(b, b) = tt;
  return m;
}

}  // namespace

std::pair<IntMatrix, IntMatrix> theta_power_matrices(const DihedralRep& rep, int i) {
  if (i < 1) throw Error(Errc::precondition, "power index must be positive");
  const IntMatrix& b = rep.B();
  const IntMatrix c = b.transpose();
  const IntMatrix bc = b * c, cb = c * b;
  const IntPolynomial f = fib_f(i);
  const IntMatrix fbc = eval_at_matrix(f, bc), fcb = eval_at_matrix(f, cb);
  const IntMatrix none;
  if (i % 2) {
    return {place(rep, 2 * fbc, fbc * b, none, none), place(rep, none, none, fcb * c, 2 * fcb)};
  }
  const IntPolynomial h = drop_x(f);
  const IntMatrix hbc = eval_at_matrix(h, bc), hcb = eval_at_matrix(h, cb);
  return {place(rep, fbc, 2 * hbc * b, none, none), place(rep, none, none, 2 * hcb * c, fcb)};
}

std::pair<IntMatrix, IntMatrix> theta_power_matrices_inductive(const DihedralRep& rep, int i) {
  if (i < 1) throw Error(Errc::precondition, "power index must be positive");
  const IntMatrix ts = rep.theta_s(), tt = rep.theta_t();
  IntMatrix s_prev, t_prev;  // length i - 2
  IntMatrix s_cur = ts, t_cur = tt;
  for (int k = 2; k <= i; ++k) {
    IntMatrix s_next = ts * t_cur, t_next = tt * s_cur;
    if (k >= 3) {
      s_next -= s_prev;
      t_next -= t_prev;
    }
    s_prev = std::move(s_cur);
    t_prev = std::move(t_cur);
    s_cur = std::move(s_next);
    t_cur = std::move(t_next);
  }
  return {s_cur, t_cur};
}

IntMatrix theta_matrix(const DihedralRep& rep, const Word& w) {
  if (w.empty()) return identity(rep.size());
  const auto [s, t] = theta_power_matrices(rep, static_cast<int>(w.size()));
  return w.front() == 0 ? s : t;
}

namespace {

// Indices m in [0, limit] with f_m(g) = 0, via the three-term recursion.
std::vector<char> fib_zero_indices(const IntMatrix& g, int limit) {
  const Eigen::Index n = g.rows();
  std::vector<char> zero(static_cast<std::size_t>(limit) + 1, 0);
  IntMatrix prev = zero_matrix(n, n), cur = identity(n);
  zero[0] = 1;
  for (int m = 2; m <= limit; ++m) {
    IntMatrix next = (m % 2 ? cur : IntMatrix(g * cur)) - prev;
    prev = std::move(cur);
    cur = std::move(next);
    zero[static_cast<std::size_t>(m)] = is_zero(cur);
  }
  return zero;
}

}  // namespace

bool annihilation_test(const IntMatrix& b, int n) {
  if (n < 0) return false;
  return fib_zero_indices(gram(b, Side::left), n)[static_cast<std::size_t>(n)] &&
         fib_zero_indices(gram(b, Side::right), n)[static_cast<std::size_t>(n)];
}

std::optional<int> recover_n(const IntMatrix& b, int bound) {
  if (bound < 3) return std::nullopt;
  const auto left = fib_zero_indices(gram(b, Side::left), bound);
  const auto right = fib_zero_indices(gram(b, Side::right), bound);
  for (int m = 3; m <= bound; ++m)
    if (left[static_cast<std::size_t>(m)] && right[static_cast<std::size_t>(m)]) return m;
  return std::nullopt;
}

DihedralRep cell_rep_B(int n, DihedralSide side) {
  if (n < 4 || n % 2) throw Error(Errc::precondition, "cell_rep_B needs an even n >= 4");
  const int k = n / 2;
  IntMatrix b = make_staircase(k, k - 1);
  if (side == DihedralSide::t) b.transposeInPlace();
  return {n, b};
}

DihedralRep cell_rep_B_odd(int n) {
  if (n < 3 || n % 2 == 0) throw Error(Errc::precondition, "cell_rep_B_odd needs an odd n >= 3");
  const int k = (n - 1) / 2;
  return {n, make_staircase(k, k)};
}

DihedralRep n_rep_B(int n, DihedralSide side) {
  if (n < 6 || n % 2) throw Error(Errc::precondition, "n_rep_B needs an even n >= 6");
  const int k = n / 2;
  IntMatrix b;
  if (k % 2) {
    const int j = (k - 1) / 2;  // (j+2) x j
    b = make_extended_staircase(j + 1, j, Extension::row);
  } else {
    const int j = k / 2;  // j x (j+1)
    b = make_extended_staircase(j, j, Extension::column);
  }
  if (side == DihedralSide::t) b.transposeInPlace();
  return {n, b};
}

std::vector<BCandidate> enumerate_B(int n) {
  if (n < 3) throw Error(Errc::precondition, "dihedral type needs n >= 3");
  std::vector<std::pair<IntMatrix, std::string>> sides;
  if (n % 2 == 0 && n >= 4) {
    for (auto side : {DihedralSide::s, DihedralSide::t}) {
      sides.emplace_back(canonical_form(cell_rep_B(n, side).B()), to_string(side));
      if (n >= 6) sides.emplace_back(canonical_form(n_rep_B(n, side).B()), to_string(side));
    }
  }
  std::vector<BCandidate> out;
  for (int total = 2; total <= n - 1; ++total)
    for (int r = 1; r < total; ++r)
      for (auto& [cls, m] : classification_universe(r, total - r)) {
        IntMatrix canon = canonical_form(m);
        bool seen = false;
        for (const auto& c : out) seen |= equal(c.canonical, canon);
        if (seen || recover_n(canon, n) != n) continue;
        BCandidate cand{cls, m, canon, "", false};
        const bool exceptional_kind =
            cls.kind == MatrixKind::X1 || cls.kind == MatrixKind::X2 || cls.kind == MatrixKind::X3;
        if (exceptional_kind) {
          cand.hypothetical = true;
          cand.side = cls.transposed ? "t" : "s";
        } else if (n % 2) {
          cand.side = "s,t";
        } else {
          for (const auto& [b, side] : sides)
            if (equal(b, canon)) cand.side = side;
        }
        out.push_back(std::move(cand));
      }
  return out;
}

Word alternating_word(int first, int length) {
  Word w;
  for (int i = 0; i < length; ++i) w.push_back((first + i) % 2);
  return w;
}

std::size_t StructureConstants::index_of(const Word& w) const {
  if (w.empty()) return 0;
  if (static_cast<int>(w.size()) >= n) throw Error(Errc::precondition, "word is not in the small quotient basis");
  return 2 * (w.size() - 1) + 1 + static_cast<std::size_t>(w.front());
}

namespace {

using LMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace

StructureConstants structure_constants(int n) {
  if (n < 3) throw Error(Errc::precondition, "dihedral type needs n >= 3");
  StructureConstants sc;
  sc.n = n;
  sc.basis.push_back({});
  for (int len = 1; len < n; ++len)
    for (int first = 0; first < 2; ++first) sc.basis.push_back(alternating_word(first, len));
  const auto dim = static_cast<Eigen::Index>(sc.dim());

  // Left multiplication by the two generators.
  std::vector<LMatrix> gen(2, LMatrix::Zero(dim, dim));
  for (int s = 0; s < 2; ++s) {
    gen[s](static_cast<Eigen::Index>(sc.index_of({s})), 0) = 1;
    for (Eigen::Index y = 1; y < dim; ++y) {
      const Word& w = sc.basis[static_cast<std::size_t>(y)];
      if (w.front() == s) {
        gen[s](y, y) = 2;
        continue;
      }
      if (static_cast<int>(w.size()) + 1 < n) {
        Word longer{s};
        longer.insert(longer.end(), w.begin(), w.end());
        gen[s](static_cast<Eigen::Index>(sc.index_of(longer)), y) += 1;
      }
      if (w.size() >= 2) gen[s](static_cast<Eigen::Index>(sc.index_of(Word(w.begin() + 1, w.end()))), y) += 1;
    }
  }

  std::vector<LMatrix> left(static_cast<std::size_t>(dim));
  left[0] = LMatrix::Identity(dim, dim);
  for (int first = 0; first < 2; ++first) {
    left[sc.index_of({first})] = gen[first];
    left[sc.index_of(alternating_word(first, 2))] = gen[first] * gen[1 - first];
  }
  for (int len = 3; len < n; ++len)
    for (int first = 0; first < 2; ++first)
      left[sc.index_of(alternating_word(first, len))] =
          gen[first] * left[sc.index_of(alternating_word(1 - first, len - 1))] -
          left[sc.index_of(alternating_word(first, len - 2))];

  sc.gamma.assign(sc.dim(), std::vector<std::vector<long long>>(sc.dim(), std::vector<long long>(sc.dim(), 0)));
  for (Eigen::Index x = 0; x < dim; ++x)
    for (Eigen::Index y = 0; y < dim; ++y)
      for (Eigen::Index z = 0; z < dim; ++z) {
        const long long g = left[x](z, y);
        if (g < 0) throw Error(Errc::internal, "negative structure constant");
        sc.gamma[x][y][z] = g;
      }

  for (Eigen::Index x = 0; x < dim; ++x)
    for (Eigen::Index y = 0; y < dim; ++y) {
      LMatrix expected = LMatrix::Zero(dim, dim);
      for (Eigen::Index z = 0; z < dim; ++z)
        if (sc.gamma[x][y][z]) expected += sc.gamma[x][y][z] * left[z];
      if (expected != left[x] * left[y]) throw Error(Errc::internal, "structure constants are not associative");
    }
  return sc;
}

std::vector<IntMatrix> cell_module_matrices(const StructureConstants& sc, DihedralSide side) {
  const int last = side == DihedralSide::s ? 0 : 1;
  std::vector<std::size_t> objects;
  for (int first = 0; first < 2; ++first)
    for (std::size_t i = 1; i < sc.dim(); ++i)
      if (sc.basis[i].front() == first && sc.basis[i].back() == last) objects.push_back(i);
  const auto k = static_cast<Eigen::Index>(objects.size());
  std::vector<IntMatrix> out;
  for (std::size_t x = 0; x < sc.dim(); ++x) {
    IntMatrix m = zero_matrix(k, k);
    for (Eigen::Index col = 0; col < k; ++col)
      for (Eigen::Index row = 0; row < k; ++row) m(row, col) = sc.gamma[x][objects[col]][objects[row]];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace smallquot
