#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "t3/errors.hpp"

namespace t3 {

using Complex = std::complex<double>;

// Dense row-major matrix with zero-based element access. Used for frontal
// slices, unfoldings and the Fourier-domain slices.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("matrix data length does not match its shape");
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = T(1);
    return I;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<Complex>;

template <typename T>
DenseMatrix<T> multiply(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: inner dimensions differ");
  }
  DenseMatrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

// Conjugate transpose (plain transpose for real matrices).
template <typename T>
DenseMatrix<T> adjoint(const DenseMatrix<T>& a) {
  DenseMatrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if constexpr (std::is_same_v<T, Complex>) {
        t(j, i) = std::conj(a(i, j));
      } else {
        t(j, i) = a(i, j);
      }
    }
  }
  return t;
}

template <typename T>
double frobenius_norm(const DenseMatrix<T>& a) {
  double s = 0.0;
  for (const T& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

template <typename T>
DenseMatrix<T> operator-(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix difference: shapes differ");
  }
  DenseMatrix<T> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) c.data()[k] = a.data()[k] - b.data()[k];
  return c;
}

inline ComplexMatrix to_complex(const Matrix& a) {
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) c.data()[k] = a.data()[k];
  return c;
}

}  // namespace t3
