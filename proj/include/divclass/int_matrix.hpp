#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace divclass {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Zero rows or zero columns are legal; such a matrix simply has no entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Literal constructor, e.g. `IntMatrix{{1, 2}, {3, 4}}`. All rows must
  /// have the same length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix from row vectors, each of length `cols`.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Integer> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  IntVector column(std::size_t j) const;

  IntMatrix transposed() const;
  /// Returns a copy with `v` appended as the last column.
  IntMatrix with_column(const IntVector& v) const;

  IntMatrix select_rows(std::span<const std::size_t> order) const;
  IntMatrix select_cols(std::span<const std::size_t> order) const;

  // Elementary operations, used by the Smith reduction.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

  bool is_zero() const;
  bool is_diagonal() const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// Nonnegative gcd of all entries; 0 for an empty or all-zero vector.
Integer gcd_of(std::span<const Integer> values);

IntVector to_int_vector(std::initializer_list<long> values);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace divclass
