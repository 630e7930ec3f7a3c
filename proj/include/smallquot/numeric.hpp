#pragma once

// Exact scalar types and dense matrix aliases shared by every module.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace smallquot {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

enum class Errc {
  precondition,
  shape,
  negative_entry,
  not_symmetric,
  reducible,
  spectrum_out_of_range,
  inconsistent,
  unsupported,
  bound_exceeded,
  parse,
  internal,
};

const char* to_string(Errc code);

// Every domain failure in the library is reported through this type; the
// code is what the command line front end prints.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntMatrix identity(Eigen::Index n);
IntMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols);

bool is_zero(const IntMatrix& m);
bool is_square(const IntMatrix& m);
bool is_symmetric(const IntMatrix& m);
bool has_negative_entry(const IntMatrix& m);
BigInt max_entry(const IntMatrix& m);

// Strict weak order: shape first, then row-major entries.
bool lex_less(const IntMatrix& a, const IntMatrix& b);
bool equal(const IntMatrix& a, const IntMatrix& b);

// [[a,b],[c,d]] style, used by tests and human-readable output.
std::string to_string(const IntMatrix& m);
std::vector<std::vector<long long>> to_nested(const IntMatrix& m);

Eigen::MatrixXd to_double(const IntMatrix& m);
Eigen::MatrixXd to_double(const RatMatrix& m);

// Simultaneous permutation: result(i, j) = m(perm[i], perm[j]).
IntMatrix permute_symmetric(const IntMatrix& m, const std::vector<int>& perm);
// Direct sum of square matrices.
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

}  // namespace smallquot
