#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hypertoric {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Shapes with zero rows or zero columns are valid and carry their other
/// dimension, so a 0x5 matrix is distinct from a 0x0 one.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// Throws Error(ShapeMismatch) on ragged input. `cols` is used when rows is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> row_vectors() const;

  IntMatrix transpose() const;
  IntMatrix select_columns(std::span<const std::size_t> indices) const;
  IntMatrix select_rows(std::span<const std::size_t> indices) const;
  /// Horizontal concatenation [*this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;

  bool is_zero() const;
  bool column_is_zero(std::size_t j) const;
  bool row_is_zero(std::size_t i) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  /// Largest absolute entry, or 0 for an empty matrix.
  Integer max_abs() const;

  /// Space separated rows joined by newlines.
  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

/// Converts to int64 when the value fits; used by the machine-word fast paths.
bool fits_int64(const Integer& x);
std::int64_t to_int64(const Integer& x);

}  // namespace hypertoric
