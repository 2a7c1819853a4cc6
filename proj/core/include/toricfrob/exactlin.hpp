#pragma once

// Exact integer and rational linear algebra. Everything here works over
// GMP integers/rationals; there is no floating point on any decision path.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "toricfrob/error.hpp"

namespace toricfrob {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorCode::InvalidArgument, "matrix entry count mismatch");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// `cols` is only consulted when `rows` is empty.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols = 0) {
    const std::size_t c = rows.empty() ? cols : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) {
        throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
      }
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols,
                             std::size_t rows = 0) {
    return from_rows(cols, rows).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) {
      throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    }
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) {
      throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
    }
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// ---- vectors ---------------------------------------------------------------

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector
/// Divides by the content; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
/// Positive rescaling of a rational vector to a primitive integer vector.
IntVector clear_denominators(const RatVector& v);
RatVector to_rational(const IntVector& v);
/// num/den in lowest terms; the two-argument mpq constructor does not reduce.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
RatMatrix to_rational(const IntMatrix& m);
/// Lexicographic order on integer vectors (mpz has no three-way compare).
bool lex_less(const IntVector& a, const IntVector& b);
bool lex_less(const RatVector& a, const RatVector& b);

// ---- integer normal forms --------------------------------------------------

/// U * A * V == S with U, V unimodular and S diagonal, d_1 | d_2 | ... .
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

/// Columns form a Z-basis of {x in Z^cols : A x = 0}.
IntMatrix kernel_lattice(const IntMatrix& A);

/// Some x in Z^cols with A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b);

Integer determinant(const IntMatrix& A);

// ---- rational linear algebra -----------------------------------------------

std::size_t rank(const RatMatrix& A);
std::optional<RatVector> solve_rational(const RatMatrix& A, const RatVector& b);
RatMatrix inverse(const RatMatrix& A);
/// Basis of the rational null space {x : A x = 0}.
std::vector<RatVector> rational_kernel(const RatMatrix& A);

// ---- linear programming ----------------------------------------------------

enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// objective . x subject to equality_matrix x = equality_rhs and
/// lower <= x <= upper, where an absent bound means +-infinity.
struct LinearProgram {
  RatVector objective;
  RatMatrix equality_matrix;
  RatVector equality_rhs;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;

  /// n variables, no constraints, x >= 0.
  static LinearProgram nonnegative(std::size_t n);
  std::size_t num_variables() const { return objective.size(); }
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RatVector witness;

  bool optimal() const { return status == LpStatus::Optimal; }
};

/// Two-phase dense simplex over the rationals with Bland's rule.
LpResult lp_optimize(const LinearProgram& lp, Sense sense);

/// Feasibility only; the witness is any feasible point.
std::optional<RatVector> lp_feasible_point(const LinearProgram& lp);

}  // namespace toricfrob
