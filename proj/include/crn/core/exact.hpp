#pragma once

// Exact integer/rational matrices and elimination routines.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crn {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Submatrix on the given row and column index lists (in the given order).
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
  }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(IntMatrix m);
Rational determinant(RatMatrix m);

// Rank by fraction-free elimination.
std::size_t rank(IntMatrix m);
std::size_t rank(RatMatrix m);

/// Determinant of a small row-major int64 matrix with overflow detection.
/// Returns nullopt when an intermediate overflows; callers fall back to the
/// arbitrary-precision routine.
std::optional<std::int64_t> determinant_i64(std::span<const std::int64_t> row_major, std::size_t n);

/// Sign of the determinant of a small int64 matrix, exact in all cases.
int determinant_sign(std::span<const std::int64_t> row_major, std::size_t n);

/// Basis of the column space, returned as indices of pivot columns.
std::vector<std::size_t> pivot_columns(RatMatrix m);

/// Basis of the right null space {v : m v = 0}.
std::vector<std::vector<Rational>> null_space(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

/// Exact rational value of a finite double.
Rational exact_rational(double v);

/// "p/q" or "p" form.
std::string to_string(const Rational& v);
Rational parse_rational(const std::string& text);

}  // namespace crn
