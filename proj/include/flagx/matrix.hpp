#pragma once

// Small dense row-major matrix used for both the exact (Rational) and the
// floating (double) pipelines. Sizes here never exceed a few dozen, so the
// kernels are plain cubic loops.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "flagx/rational.hpp"

namespace flagx {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_zero(v[j])) continue;
      for (std::size_t i = 0; i < rows_; ++i)
        if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    }
    return out;
  }

  T trace() const {
    T s(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

inline bool pivot_usable(const Rational& x) { return sgn(x) != 0; }
inline bool pivot_usable(double x) { return std::abs(x) > 1e-300; }

// Index of the pivot row in column `col` at or below `from`, or -1.
template <class T>
long choose_pivot(const Matrix<T>& m, std::size_t col, std::size_t from) {
  long best = -1;
  if constexpr (std::is_same_v<T, double>) {
    double best_abs = 0.0;
    for (std::size_t r = from; r < m.rows(); ++r)
      if (std::abs(m(r, col)) > best_abs) {
        best_abs = std::abs(m(r, col));
        best = static_cast<long>(r);
      }
    if (best >= 0 && !pivot_usable(best_abs)) best = -1;
  } else {
    for (std::size_t r = from; r < m.rows(); ++r)
      if (pivot_usable(m(r, col))) return static_cast<long>(r);
  }
  return best;
}

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    const long p = detail::choose_pivot(m, col, row);
    if (p < 0) continue;
    detail::swap_rows(m, row, static_cast<std::size_t>(p));
    const T inv = T(1) / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const T f = m(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Solves A X = B for square nonsingular A. Throws std::domain_error when A
/// is singular.
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  Matrix<T> aug(n, n + b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw std::domain_error("solve: singular matrix");
  Matrix<T> x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
  return x;
}

template <class T>
std::vector<T> solve(const Matrix<T>& a, const std::vector<T>& b) {
  Matrix<T> rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  const Matrix<T> x = solve(a, rhs);
  std::vector<T> out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out[i] = x(i, 0);
  return out;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

/// Basis of the right null space, one vector per column of the result.
template <class T>
Matrix<T> null_space(const Matrix<T>& a) {
  Matrix<T> r = a;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<T> basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, free_cols[k]);
  }
  return basis;
}

/// Coefficients c[0..n] of det(x I - A) = sum c[k] x^k (Faddeev-LeVerrier).
template <class T>
std::vector<T> characteristic_polynomial(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const T tr = (a * m).trace();
    c[n - k] = -tr / T(static_cast<long>(k));
  }
  return c;
}

template <class T>
T evaluate_polynomial(const std::vector<T>& coeffs, const T& x) {
  T acc(0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

/// Positive definiteness through the pivots of symmetric elimination
/// (Sylvester's criterion). Exact for Rational.
template <class T>
bool is_positive_definite(Matrix<T> m) {
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (!(m(k, k) > T(0))) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      const T f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

template <class T>
Matrix<double> to_double(const Matrix<T>& m) {
  Matrix<double> d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = flagx::to_double(m(i, j));
  return d;
}

}  // namespace flagx
