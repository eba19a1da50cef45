#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "toric/integer.hpp"

namespace toric {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Integer> row(std::size_t i) const;
  std::vector<Integer> col(std::size_t j) const;
  /// Entries of row i narrowed to 64 bits (throws on overflow).
  IntVector row_int64(std::size_t i) const;
  IntVector col_int64(std::size_t j) const;

  IntMatrix transpose() const;
  /// Rows [first, first + count).
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  IntMatrix col_block(std::size_t first, std::size_t count) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  bool operator==(const IntMatrix& other) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SnfResult {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  std::size_t rank = 0;

  /// The nonzero diagonal entries, all positive.
  std::vector<Integer> elementary_divisors() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// H = W * A in row echelon form: positive pivots, entries above a pivot
/// reduced into [0, pivot). Zero rows are kept at the bottom.
struct HnfResult {
  IntMatrix W;
  IntMatrix H;
  std::size_t rank = 0;
};

HnfResult hermite_normal_form(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);

/// Basis of {x in Z^cols : A x = 0}; every vector is primitive.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// True when the row vectors extend to a basis of Z^cols
/// (independent, and all elementary divisors equal to 1).
bool is_unimodular_row_set(const IntMatrix& a);

/// Exact solution of A x = b for square nonsingular A; nullopt if singular.
std::optional<RationalVector> solve_rational(const IntMatrix& a,
                                             const RationalVector& b);

}  // namespace toric
