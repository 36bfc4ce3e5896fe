#pragma once

#include <cstdint>

#include "t3/parallel.hpp"
#include "t3/spectral.hpp"
#include "t3/tensor.hpp"

namespace t3 {

// T-product A * B of an m x n x p and an n x t x p tensor, computed as
// independent products of the Fourier slices.
DenseTensor3 tprod(const DenseTensor3& a, const DenseTensor3& b,
                   Exec exec = Exec::parallel);

// fold(bcirc(A) * unfold(B)). Quadratically larger than tprod; kept as the
// reference path for tests and oracle-compare.
DenseTensor3 tprod_bcirc(const DenseTensor3& a, const DenseTensor3& b);

// Slice-wise product of two spectra.
SpectralTensor3 slice_product(const SpectralTensor3& a, const SpectralTensor3& b,
                              Exec exec = Exec::parallel);

// Transposes every frontal slice and reverses the order of slices 2..p.
DenseTensor3 transpose(const DenseTensor3& a);

DenseTensor3 identity(std::size_t n, std::size_t p);

// Inverse through per-slice SVDs in the Fourier domain. A slice whose
// smallest singular value is <= 1e-12 times its largest raises
// SingularSliceError.
DenseTensor3 inverse(const DenseTensor3& a, Exec exec = Exec::parallel);

// ||Q^T * Q - I||_F <= tol * sqrt(q * p); wide tensors (q > rows) are rejected.
bool is_partially_orthogonal(const DenseTensor3& q, double tol);
// Both Q^T * Q and Q * Q^T within tol * sqrt(n * p) of the identity.
bool is_orthogonal(const DenseTensor3& q, double tol);

// Normalized identity defect ||Q^T * Q - I||_F / sqrt(q * p).
double orthogonality_defect(const DenseTensor3& q);

// Partially orthogonal m x k x p tensor (orthogonal when k == m),
// deterministic in seed. Requires k <= m.
DenseTensor3 random_orthogonal(std::size_t m, std::size_t k, std::size_t p,
                               std::uint64_t seed);

}  // namespace t3
