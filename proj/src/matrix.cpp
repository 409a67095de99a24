#include "lcert/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lcert {

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("PolyMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = iota(1);
  return m;
}

PolyMatrix PolyMatrix::from_row_major(std::size_t rows, std::size_t cols,
                                      std::vector<LaurentPoly> entries) {
  if (entries.size() != rows * cols)
    throw std::invalid_argument("PolyMatrix: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(entries.size()));
  PolyMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(entries);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  PolyMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const LaurentPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum: shape mismatch");
  PolyMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

PolyMatrix conjugate_transpose(const PolyMatrix& m) {
  PolyMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = involve(m(i, j));
  return r;
}

PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

LaurentPoly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return iota(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

  PolyMatrix w = m;
  LaurentPoly prev = iota(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && w(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        auto q = divide_exact(num, prev);
        // Sylvester's identity guarantees exactness.
        if (!q) throw std::logic_error("determinant: Bareiss step not exact");
        w(i, j) = std::move(*q);
      }
      w(i, k) = LaurentPoly{};
    }
    prev = w(k, k);
  }
  LaurentPoly d = w(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

}  // namespace lcert
