// Dense matrices over Z[t, t^-1].

#ifndef LCERT_MATRIX_HPP
#define LCERT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lcert/laurent.hpp"

namespace lcert {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  PolyMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows);

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix from_row_major(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<LaurentPoly>& row_major() const { return data_; }

  bool is_zero() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Throws std::invalid_argument on shape mismatch.
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);

/// Involution applied entrywise, then transposed.
PolyMatrix conjugate_transpose(const PolyMatrix& m);

/// Block-diagonal sum.
PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for non-square input.
LaurentPoly determinant(const PolyMatrix& m);

}  // namespace lcert

#endif  // LCERT_MATRIX_HPP
