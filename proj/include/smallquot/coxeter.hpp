#pragma once

// Coxeter presentations, braid-move rewriting and the two-sided cell J of
// elements with a unique reduced expression.

#include <Eigen/Core>

#include <set>
#include <string>
#include <vector>

namespace smallquot {

// Generator indices, 0-based.
using Word = std::vector<int>;

class CoxeterSystem {
 public:
  CoxeterSystem(std::string name, Eigen::MatrixXi coxeter_matrix);

  static CoxeterSystem A(int n);
  static CoxeterSystem B(int n);
  static CoxeterSystem D(int n);
  static CoxeterSystem F4();
  static CoxeterSystem H3();
  static CoxeterSystem H4();
  static CoxeterSystem I2(int m);
  // Tokens A3, B4, D5, F4, H3, H4, I2_7.
  static CoxeterSystem parse(const std::string& token);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(m_.rows()); }
  int m(int s, int t) const { return m_(s, t); }
  const Eigen::MatrixXi& coxeter_matrix() const { return m_; }
  // 1-based labels "1", "2", ...
  std::vector<std::string> labels() const;
  // Pairs s < t that do not commute.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::string name_;
  Eigen::MatrixXi m_;
};

std::set<Word> tits_orbit(const CoxeterSystem& system, const Word& w);
bool is_reduced(const CoxeterSystem& system, const Word& w);
bool has_unique_reduced_expression(const CoxeterSystem& system, const Word& w);
bool a_is_one(const CoxeterSystem& system, const Word& w);

class CellTable {
 public:
  CellTable(CoxeterSystem system, std::vector<Word> elements);

  const CoxeterSystem& system() const { return system_; }
  // Sorted by (length, lexicographic).
  const std::vector<Word>& elements() const { return elements_; }
  bool contains(const Word& w) const;
  static int left_cell_of(const Word& w) { return w.back(); }
  static int right_cell_of(const Word& w) { return w.front(); }
  // Elements with the given right (first letter) and left (last letter) cell.
  std::vector<Word> box(int right, int left) const;

 private:
  CoxeterSystem system_;
  std::vector<Word> elements_;
};

CellTable enumerate_J(const CoxeterSystem& system);
// Every non-empty word up to max_length with a unique reduced expression,
// found without prefix pruning.
std::vector<Word> exhaustive_J(const CoxeterSystem& system, int max_length);

// Digit strings with 1-based letters ("12321") up to rank 9, else "[1,2,...]".
std::string word_to_string(const Word& w, int rank = 9);
Word parse_word(const std::string& text);

// Row/column layout of the cell table, one box per (right, left) pair.
std::string render_cell_table(const CellTable& table);

}  // namespace smallquot
