#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spantree {

/// Dense row-major matrix over a commutative ring. Indices are 0-based;
/// for Laplacians, row k corresponds to the k-th vertex of the ordering the
/// matrix was built from.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  T& at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return (*this)(r, c);
  }
  const T& at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return (*this)(r, c);
  }

  std::vector<T> diagonal() const {
    std::vector<T> d;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
    return d;
  }

  /// Copy with row `skip_r` and column `skip_c` removed.
  Matrix without(std::size_t skip_r, std::size_t skip_c) const {
    if (skip_r >= rows_ || skip_c >= cols_) throw std::out_of_range("minor index out of range");
    Matrix out;
    out.rows_ = rows_ - 1;
    out.cols_ = cols_ - 1;
    out.data_.reserve(out.rows_ * out.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == skip_r) continue;
      for (std::size_t c = 0; c < cols_; ++c)
        if (c != skip_c) out.data_.push_back((*this)(r, c));
    }
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Fraction-free (Bareiss) determinant over an integral domain. `one` is the
/// ring identity (it carries context such as a variable count), and
/// `exact_div(a, b)` must return a / b, throwing if b does not divide a.
/// Pivot: first nonzero entry in the column; a zero column gives 0.
template <class T, class ExactDiv>
T bareiss_determinant(Matrix<T> m, const T& one, ExactDiv exact_div) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const T zero = one - one;
  if (n == 0) return one;

  bool negate = false;
  T previous = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == zero) ++pivot;
    if (pivot == n) return zero;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      m(i, k) = zero;
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? zero - det : det;
}

/// Laplace expansion along the first row. Exponential; intended as an
/// independent cross-check for small matrices.
template <class T>
T expansion_determinant(const Matrix<T>& m, const T& one) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const T zero = one - one;
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  T total = zero;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == zero) continue;
    T term = m(0, c) * expansion_determinant(m.without(0, c), one);
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

template <class T>
bool is_upper_triangular(const Matrix<T>& m, const T& zero) {
  if (!m.square()) throw std::invalid_argument("triangularity of a non-square matrix");
  for (std::size_t r = 1; r < m.rows(); ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (!(m(r, c) == zero)) return false;
  return true;
}

/// m + a b^T
template <class T>
Matrix<T> rank_one_update(Matrix<T> m, const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != m.rows() || b.size() != m.cols())
    throw std::invalid_argument("rank-one update: vector length does not match matrix");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = m(r, c) + a[r] * b[c];
  return m;
}

} // namespace spantree
