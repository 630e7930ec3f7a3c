#include "smallquot/coxeter.hpp"

#include "smallquot/numeric.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace smallquot {

namespace {

Eigen::MatrixXi commuting(int n) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Constant(n, n, 2);
  m.diagonal().setOnes();
  return m;
}

void link(Eigen::MatrixXi& m, int s, int t, int label) {
  m(s, t) = label;
  m(t, s) = label;
}

Eigen::MatrixXi chain(int n) {
  Eigen::MatrixXi m = commuting(n);
  for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1, 3);
  return m;
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::string name, Eigen::MatrixXi coxeter_matrix)
    : name_(std::move(name)), m_(std::move(coxeter_matrix)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols()) throw Error(Errc::shape, "Coxeter matrix must be square and non-empty");
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) {
      if (m_(i, j) != m_(j, i)) throw Error(Errc::not_symmetric, "Coxeter matrix must be symmetric");
      if (i == j ? m_(i, j) != 1 : m_(i, j) < 2) throw Error(Errc::precondition, "invalid Coxeter matrix entry");
    }
}

CoxeterSystem CoxeterSystem::A(int n) {
  if (n < 1) throw Error(Errc::precondition, "A_n needs n >= 1");
  return {"A" + std::to_string(n), chain(n)};
}

CoxeterSystem CoxeterSystem::B(int n) {
  if (n < 2) throw Error(Errc::precondition, "B_n needs n >= 2");
  Eigen::MatrixXi m = chain(n);
  link(m, 0, 1, 4);
  return {"B" + std::to_string(n), m};
}

CoxeterSystem CoxeterSystem::D(int n) {
  if (n < 4) throw Error(Errc::precondition, "D_n needs n >= 4");
  Eigen::MatrixXi m = chain(n - 1);
  m.conservativeResize(n, n);
  m.row(n - 1).setConstant(2);
  m.col(n - 1).setConstant(2);
  m(n - 1, n - 1) = 1;
  link(m, n - 1, n - 3, 3);
  return {"D" + std::to_string(n), m};
}

CoxeterSystem CoxeterSystem::F4() {
  Eigen::MatrixXi m = chain(4);
  link(m, 1, 2, 4);
  return {"F4", m};
}

CoxeterSystem CoxeterSystem::H3() {
  Eigen::MatrixXi m = chain(3);
  link(m, 0, 1, 5);
  return {"H3", m};
}

CoxeterSystem CoxeterSystem::H4() {
  Eigen::MatrixXi m = chain(4);
  link(m, 0, 1, 5);
  return {"H4", m};
}

CoxeterSystem CoxeterSystem::I2(int m) {
  if (m < 3) throw Error(Errc::precondition, "I2(m) needs m >= 3");
  Eigen::MatrixXi cm = chain(2);
  link(cm, 0, 1, m);
  return {"I2_" + std::to_string(m), cm};
}

CoxeterSystem CoxeterSystem::parse(const std::string& token) {
  auto number = [&](std::size_t from) {
    const std::string digits = token.substr(from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 4)
      throw Error(Errc::parse, "bad Coxeter type token '" + token + "'");
    return std::stoi(digits);
  };
  if (token == "F4") return F4();
  if (token == "H3") return H3();
  if (token == "H4") return H4();
  if (token.rfind("I2_", 0) == 0) return I2(number(3));
  if (!token.empty() && token[0] == 'A') return A(number(1));
  if (!token.empty() && token[0] == 'B') return B(number(1));
  if (!token.empty() && token[0] == 'D') return D(number(1));
  throw Error(Errc::unsupported, "unknown Coxeter type '" + token + "'");
}

std::vector<std::string> CoxeterSystem::labels() const {
  std::vector<std::string> out;
  for (int i = 1; i <= rank(); ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<std::pair<int, int>> CoxeterSystem::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < rank(); ++s)
    for (int t = s + 1; t < rank(); ++t)
      if (m(s, t) > 2) out.emplace_back(s, t);
  return out;
}

namespace {

void check_letters(const CoxeterSystem& system, const Word& w) {
  for (int s : w)
    if (s < 0 || s >= system.rank()) throw Error(Errc::precondition, "letter outside the generating set");
}

// Words reachable from w by one braid move.
std::vector<Word> braid_neighbours(const CoxeterSystem& system, const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const int s = w[i], t = w[i + 1];
    if (s == t) continue;
    const auto len = static_cast<std::size_t>(system.m(s, t));
    if (i + len > w.size()) continue;
    bool alternating = true;
    for (std::size_t k = 0; k < len && alternating; ++k) alternating = w[i + k] == (k % 2 ? t : s);
    if (!alternating) continue;
    Word v = w;
    for (std::size_t k = 0; k < len; ++k) v[i + k] = k % 2 ? s : t;
    out.push_back(std::move(v));
  }
  return out;
}

bool has_square(const Word& w) { return std::adjacent_find(w.begin(), w.end()) != w.end(); }

}  // namespace

std::set<Word> tits_orbit(const CoxeterSystem& system, const Word& w) {
  check_letters(system, w);
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (auto& v : braid_neighbours(system, cur))
      if (seen.insert(v).second) queue.push_back(std::move(v));
  }
  return seen;
}

bool is_reduced(const CoxeterSystem& system, const Word& w) {
  for (const auto& v : tits_orbit(system, w))
    if (has_square(v)) return false;
  return true;
}

bool has_unique_reduced_expression(const CoxeterSystem& system, const Word& w) {
  const auto orbit = tits_orbit(system, w);
  for (const auto& v : orbit)
    if (has_square(v)) throw Error(Errc::precondition, "word is not reduced");
  return orbit.size() == 1;
}

bool a_is_one(const CoxeterSystem& system, const Word& w) {
  return !w.empty() && has_unique_reduced_expression(system, w);
}

namespace {

bool shortlex(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

CellTable::CellTable(CoxeterSystem system, std::vector<Word> elements)
    : system_(std::move(system)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), shortlex);
}

bool CellTable::contains(const Word& w) const {
  return std::binary_search(elements_.begin(), elements_.end(), w, shortlex);
}

std::vector<Word> CellTable::box(int right, int left) const {
  std::vector<Word> out;
  for (const auto& w : elements_)
    if (right_cell_of(w) == right && left_cell_of(w) == left) out.push_back(w);
  return out;
}

CellTable enumerate_J(const CoxeterSystem& system) {
  std::vector<Word> found, frontier;
  for (int s = 0; s < system.rank(); ++s) frontier.push_back({s});
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      found.push_back(w);
      for (int s = 0; s < system.rank(); ++s) {
        if (s == w.back()) continue;
        Word v = w;
        v.push_back(s);
        if (is_reduced(system, v) && has_unique_reduced_expression(system, v)) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return {system, std::move(found)};
}

std::vector<Word> exhaustive_J(const CoxeterSystem& system, int max_length) {
  std::vector<Word> out;
  std::vector<Word> layer{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> grown;
    for (const auto& w : layer)
      for (int s = 0; s < system.rank(); ++s) {
        if (!w.empty() && w.back() == s) continue;
        Word v = w;
        v.push_back(s);
        grown.push_back(v);
        if (is_reduced(system, v) && has_unique_reduced_expression(system, v)) out.push_back(std::move(v));
      }
    layer = std::move(grown);
  }
  std::sort(out.begin(), out.end(), shortlex);
  return out;
}

std::string word_to_string(const Word& w, int rank) {
  std::ostringstream out;
  if (rank <= 9) {
    for (int s : w) out << s + 1;
    return out.str();
  }
  out << '[';
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i] + 1;
  out << ']';
  return out.str();
}

Word parse_word(const std::string& text) {
  Word w;
  if (!text.empty() && text.front() == '[') {
    std::string body = text.substr(1, text.size() >= 2 ? text.size() - 2 : 0);
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ','))
      if (!item.empty()) w.push_back(std::stoi(item) - 1);
    return w;
  }
  for (char c : text) {
    if (c < '1' || c > '9') throw Error(Errc::parse, "bad word '" + text + "'");
    w.push_back(c - '1');
  }
  return w;
}

std::string render_cell_table(const CellTable& table) {
  const int r = table.system().rank();
  const int rank_for_words = r;
  std::vector<std::vector<std::string>> cells(r + 1, std::vector<std::string>(r + 1));
  for (int j = 0; j < r; ++j) cells[0][j + 1] = "L" + std::to_string(j + 1);
  for (int i = 0; i < r; ++i) {
    cells[i + 1][0] = "R" + std::to_string(i + 1);
    for (int j = 0; j < r; ++j) {
      std::string text;
      for (const auto& w : table.box(i, j)) text += (text.empty() ? "" : " ") + word_to_string(w, rank_for_words);
      cells[i + 1][j + 1] = text;
    }
  }
  std::vector<std::size_t> width(r + 1, 0);
  for (const auto& row : cells)
    for (int j = 0; j <= r; ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream out;
  auto rule = [&] {
    out << '+';
    for (auto w : width) out << std::string(w + 2, '-') << '+';
    out << '\n';
  };
  rule();
  for (const auto& row : cells) {
    out << '|';
    for (int j = 0; j <= r; ++j) out << ' ' << row[j] << std::string(width[j] - row[j].size() + 1, ' ') << '|';
    out << '\n';
    rule();
  }
  return out.str();
}

}  // namespace smallquot
