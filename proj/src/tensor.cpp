#include "t3/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace t3 {

namespace {

void require_positive(std::size_t m, std::size_t n, std::size_t p) {
  if (m == 0 || n == 0 || p == 0) {
    throw DimensionError("tensor dimensions must be positive, got " +
                         std::to_string(m) + "x" + std::to_string(n) + "x" +
                         std::to_string(p));
  }
}

void require_same_shape(const DenseTensor3& a, const DenseTensor3& b,
                        const char* what) {
  if (!a.same_shape(b)) {
    throw DimensionError(std::string(what) + ": tensor shapes differ");
  }
}

}  // namespace

DenseTensor3::DenseTensor3(std::size_t m, std::size_t n, std::size_t p)
    : m_(m), n_(n), p_(p), values_(m * n * p, 0.0) {
  require_positive(m, n, p);
}

DenseTensor3::DenseTensor3(std::size_t m, std::size_t n, std::size_t p,
                           std::vector<double> values)
    : m_(m), n_(n), p_(p), values_(std::move(values)) {
  require_positive(m, n, p);
  if (values_.size() != m * n * p) {
    throw DimensionError("tensor payload has " + std::to_string(values_.size()) +
                         " values, expected " + std::to_string(m * n * p));
  }
}

double DenseTensor3::at(std::size_t i, std::size_t j, std::size_t k) const {
  if (i < 1 || i > m_ || j < 1 || j > n_ || k < 1 || k > p_) {
    throw IndexError("tensor element index out of range");
  }
  return (*this)(i - 1, j - 1, k - 1);
}

Matrix DenseTensor3::frontal_slice(std::size_t k) const {
  if (k < 1 || k > p_) throw IndexError("frontal slice index out of range");
  const auto first = values_.begin() + static_cast<std::ptrdiff_t>((k - 1) * m_ * n_);
  return Matrix(m_, n_, std::vector<double>(first, first + static_cast<std::ptrdiff_t>(m_ * n_)));
}

void DenseTensor3::set_frontal_slice(std::size_t k, const Matrix& slice) {
  if (k < 1 || k > p_) throw IndexError("frontal slice index out of range");
  if (slice.rows() != m_ || slice.cols() != n_) {
    throw DimensionError("frontal slice shape does not match tensor");
  }
  std::copy(slice.data().begin(), slice.data().end(),
            values_.begin() + static_cast<std::ptrdiff_t>((k - 1) * m_ * n_));
}

std::vector<double> DenseTensor3::tube(std::size_t i, std::size_t j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_) throw IndexError("tube index out of range");
  std::vector<double> t(p_);
  for (std::size_t k = 0; k < p_; ++k) t[k] = (*this)(i - 1, j - 1, k);
  return t;
}

IndexSubset::IndexSubset(Mode kind, std::vector<std::size_t> indices)
    : kind_(kind), indices_(std::move(indices)) {
  if (indices_.empty()) throw IndexError("index subset must be nonempty");
  if (indices_.front() < 1) throw IndexError("index subset is 1-based");
  for (std::size_t t = 1; t < indices_.size(); ++t) {
    if (indices_[t] <= indices_[t - 1]) {
      throw IndexError("index subset must be strictly increasing");
    }
  }
}

IndexSubset IndexSubset::all(Mode kind, std::size_t count) {
  std::vector<std::size_t> idx(count);
  for (std::size_t t = 0; t < count; ++t) idx[t] = t + 1;
  return IndexSubset(kind, std::move(idx));
}

Matrix unfold(const DenseTensor3& a) {
  // Frontal-slice-major storage is already the block column stack.
  return Matrix(a.rows() * a.depth(), a.cols(),
                std::vector<double>(a.values().begin(), a.values().end()));
}

DenseTensor3 fold(const Matrix& stacked, std::size_t m, std::size_t p) {
  if (m == 0 || p == 0 || stacked.rows() != m * p) {
    throw DimensionError("fold: row count " + std::to_string(stacked.rows()) +
                         " is not m*p = " + std::to_string(m * p));
  }
  return DenseTensor3(m, stacked.cols(), p,
                      std::vector<double>(stacked.data().begin(), stacked.data().end()));
}

Matrix bcirc(const DenseTensor3& a) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  Matrix out(m * p, n * p);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) {
      const std::size_t k = (r + p - c) % p;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(r * m + i, c * n + j) = a(i, j, k);
      }
    }
  }
  return out;
}

DenseTensor3 add(const DenseTensor3& a, const DenseTensor3& b) {
  require_same_shape(a, b, "add");
  DenseTensor3 c(a.rows(), a.cols(), a.depth());
  for (std::size_t t = 0; t < a.size(); ++t) c.values()[t] = a.values()[t] + b.values()[t];
  return c;
}

DenseTensor3 sub(const DenseTensor3& a, const DenseTensor3& b) {
  require_same_shape(a, b, "sub");
  DenseTensor3 c(a.rows(), a.cols(), a.depth());
  for (std::size_t t = 0; t < a.size(); ++t) c.values()[t] = a.values()[t] - b.values()[t];
  return c;
}

DenseTensor3 scale(const DenseTensor3& a, double factor) {
  DenseTensor3 c(a.rows(), a.cols(), a.depth());
  for (std::size_t t = 0; t < a.size(); ++t) c.values()[t] = factor * a.values()[t];
  return c;
}

DenseTensor3 operator+(const DenseTensor3& a, const DenseTensor3& b) { return add(a, b); }
DenseTensor3 operator-(const DenseTensor3& a, const DenseTensor3& b) { return sub(a, b); }
DenseTensor3 operator*(double factor, const DenseTensor3& a) { return scale(a, factor); }

double frobenius_norm(const DenseTensor3& a) {
  double s = 0.0;
  for (double v : a.values()) s += v * v;
  return std::sqrt(s);
}

DenseTensor3 subtensor(const DenseTensor3& a, const IndexSubset& rows,
                       const IndexSubset& cols) {
  if (rows.kind() != Mode::rows || cols.kind() != Mode::cols) {
    throw IndexError("subtensor: expected a row subset and a column subset");
  }
  if (rows.indices().back() > a.rows() || cols.indices().back() > a.cols()) {
    throw IndexError("subtensor: index out of range");
  }
  DenseTensor3 b(rows.size(), cols.size(), a.depth());
  for (std::size_t k = 0; k < a.depth(); ++k) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        b(i, j, k) = a(rows.indices()[i] - 1, cols.indices()[j] - 1, k);
      }
    }
  }
  return b;
}

DenseTensor3 concat_lateral(const DenseTensor3& a, const DenseTensor3& m) {
  if (a.rows() != m.rows() || a.depth() != m.depth()) {
    throw DimensionError("concat_lateral: row count or depth differ");
  }
  DenseTensor3 b(a.rows(), a.cols() + m.cols(), a.depth());
  for (std::size_t k = 0; k < a.depth(); ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) b(i, j, k) = a(i, j, k);
      for (std::size_t j = 0; j < m.cols(); ++j) b(i, a.cols() + j, k) = m(i, j, k);
    }
  }
  return b;
}

DenseTensor3 diagonal_tensor(std::size_t m, std::size_t n, std::size_t p,
                             std::span<const double> first_slice_diagonal) {
  DenseTensor3 d(m, n, p);
  if (first_slice_diagonal.size() > d.min_dim()) {
    throw DimensionError("diagonal_tensor: too many diagonal entries");
  }
  for (std::size_t i = 0; i < first_slice_diagonal.size(); ++i) {
    d(i, i, 0) = first_slice_diagonal[i];
  }
  return d;
}

}  // namespace t3
