#pragma once

#include <vector>

#include "t3/matrix.hpp"
#include "t3/parallel.hpp"
#include "t3/tensor.hpp"

namespace t3 {

// A = U * S * V^T with U (m x m x p) and V (n x n x p) orthogonal and S
// f-diagonal. Every Fourier slice of S is diag(sigma^k_1, ..., sigma^k_{n'})
// in descending order.
struct TsvdFactors {
  DenseTensor3 u;
  DenseTensor3 s;
  DenseTensor3 v;
};

// Tensor singular values alpha_1 >= ... >= alpha_{n'} >= 0, n' = min(m, n).
//
// per_slice is p x n': row k holds the descending singular values of the
// (k+1)-th Fourier slice, and values[j] is the mean of column j. Since the
// rows are each descending and floating-point addition is monotone, values
// is descending exactly.
struct SingularSpectrum {
  std::vector<double> values;
  Matrix per_slice;

  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
  // 1-based access to alpha_j.
  double operator[](std::size_t j) const { return values.at(j - 1); }
};

TsvdFactors tsvd(const DenseTensor3& a, Exec exec = Exec::parallel);

SingularSpectrum singular_values(const DenseTensor3& a, Exec exec = Exec::parallel);

// Largest tensor singular value.
double spectral_norm(const DenseTensor3& a, Exec exec = Exec::parallel);

// Frobenius norm of the off-diagonal part of every frontal slice.
double f_diagonal_residue(const DenseTensor3& s);

}  // namespace t3
