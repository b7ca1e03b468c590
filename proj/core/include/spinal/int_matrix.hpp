#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spinal {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Empty shapes (0 x n, n x 0) are legal and stand for the zero map between
/// a trivial group and a free one. Matrices act on column vectors: column i
/// is the image of the i-th basis vector.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const Integer& at(std::size_t r, std::size_t c) const;

  std::span<const Integer> entries() const noexcept { return data_; }
  std::span<const Integer> row(std::size_t r) const {
    return std::span<const Integer>(data_).subspan(r * cols_, cols_);
  }

  IntMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
/// Binary exponentiation; mat_pow(a, 0) is the identity.
IntMatrix mat_pow(const IntMatrix& a, std::uint64_t k);

/// Horizontal block concatenation [a_1 | a_2 | ...]; all blocks share a row count.
IntMatrix hconcat(std::span<const IntMatrix> blocks);

/// Canonical literal, e.g. "[[7,3],[-3,-2]]". Empty rows render as "[]".
std::string to_literal(const IntMatrix& m);

/// Parses the nested-bracket literal accepted by the command line.
/// Whitespace is allowed anywhere between tokens. Throws InputError.
IntMatrix parse_matrix_literal(std::string_view text);

}  // namespace spinal
