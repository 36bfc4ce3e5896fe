#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "t3/matrix.hpp"

namespace t3 {

// Real m x n x p third-order tensor.
//
// Values are stored frontal-slice-major: the slice index k is outermost, then
// the row i, then the column j. Public slice/tube/element accessors take
// 1-based indices; operator() is the zero-based unchecked kernel accessor.
class DenseTensor3 {
 public:
  DenseTensor3() = default;
  DenseTensor3(std::size_t m, std::size_t n, std::size_t p);
  DenseTensor3(std::size_t m, std::size_t n, std::size_t p,
               std::vector<double> values);

  static DenseTensor3 zeros(std::size_t m, std::size_t n, std::size_t p) {
    return DenseTensor3(m, n, p);
  }

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::size_t depth() const { return p_; }
  std::size_t size() const { return values_.size(); }
  // Number of tensor singular values, min(m, n).
  std::size_t min_dim() const { return m_ < n_ ? m_ : n_; }

  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return values_[(k * m_ + i) * n_ + j];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[(k * m_ + i) * n_ + j];
  }

  // Bounds-checked, 1-based.
  double at(std::size_t i, std::size_t j, std::size_t k) const;
  Matrix frontal_slice(std::size_t k) const;
  void set_frontal_slice(std::size_t k, const Matrix& slice);
  std::vector<double> tube(std::size_t i, std::size_t j) const;

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  bool same_shape(const DenseTensor3& other) const {
    return m_ == other.m_ && n_ == other.n_ && p_ == other.p_;
  }

  bool operator==(const DenseTensor3&) const = default;

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::vector<double> values_;
};

enum class Mode { rows, cols };

// Strictly increasing 1-based indices into mode 1 (rows) or mode 2 (cols).
class IndexSubset {
 public:
  IndexSubset(Mode kind, std::vector<std::size_t> indices);
  static IndexSubset all(Mode kind, std::size_t count);

  Mode kind() const { return kind_; }
  std::span<const std::size_t> indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }

 private:
  Mode kind_;
  std::vector<std::size_t> indices_;
};

// [A_1; ...; A_p], an (m p) x n matrix.
Matrix unfold(const DenseTensor3& a);
DenseTensor3 fold(const Matrix& stacked, std::size_t m, std::size_t p);

// Block (r, c) of the result is A_{1 + ((r - c) mod p)}.
Matrix bcirc(const DenseTensor3& a);

DenseTensor3 add(const DenseTensor3& a, const DenseTensor3& b);
DenseTensor3 sub(const DenseTensor3& a, const DenseTensor3& b);
DenseTensor3 scale(const DenseTensor3& a, double factor);
DenseTensor3 operator+(const DenseTensor3& a, const DenseTensor3& b);
DenseTensor3 operator-(const DenseTensor3& a, const DenseTensor3& b);
DenseTensor3 operator*(double factor, const DenseTensor3& a);

double frobenius_norm(const DenseTensor3& a);

// B(i', j', k) = A(rows[i'], cols[j'], k); the third mode is kept whole.
DenseTensor3 subtensor(const DenseTensor3& a, const IndexSubset& rows,
                       const IndexSubset& cols);

// [A, M]: appends the lateral slices of M after those of A.
DenseTensor3 concat_lateral(const DenseTensor3& a, const DenseTensor3& m);

// Frontal slice 1 set to diag(values), other slices zero.
DenseTensor3 diagonal_tensor(std::size_t m, std::size_t n, std::size_t p,
                             std::span<const double> first_slice_diagonal);

}  // namespace t3
