#pragma once

#include <cstddef>
#include <vector>

#include "t3/matrix.hpp"
#include "t3/tensor.hpp"

namespace t3 {

// Mode-3 DFT of a real tensor: p complex m x n frontal slices.
// slices[k] holds the (k+1)-th Fourier slice.
struct SpectralTensor3 {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  std::vector<ComplexMatrix> slices;

  static SpectralTensor3 zeros(std::size_t m, std::size_t n, std::size_t p);
};

// Primitive p-th root of unity omega = exp(-2 pi i / p) and its powers.
class DftPlan {
 public:
  explicit DftPlan(std::size_t p);
  std::size_t length() const { return p_; }
  Complex omega() const { return power(1); }
  // omega^e, reduced mod p before evaluation.
  Complex power(std::size_t e) const;

 private:
  std::size_t p_;
};

double frobenius_norm(const SpectralTensor3& s);

// Frobenius norm of the deviation from conj(S_k) = S_{p-k} (0-based), which
// includes the imaginary parts of the self-conjugate slices.
double conjugate_symmetry_defect(const SpectralTensor3& s);

// Fills slices floor(p/2)+1 .. p-1 from their conjugate partners.
void complete_conjugate_symmetry(SpectralTensor3& s);

// Unnormalized DFT along every tube.
SpectralTensor3 fft_mode3(const DenseTensor3& a);

// Inverse DFT with the 1/p factor. The spectrum must be conjugate symmetric
// within 1e-8 * ||S||_F, otherwise SymmetryError; the imaginary residue of the
// result is discarded.
DenseTensor3 ifft_mode3(const SpectralTensor3& s);

// Quadratic-cost DFT by direct summation over powers of omega.
SpectralTensor3 naive_dft_mode3(const DenseTensor3& a);

// Materializes (F_p (x) I_m) bcirc(A) (F_p^{-1} (x) I_n) and returns its p
// diagonal blocks. Test scale only.
std::vector<ComplexMatrix> block_diagonalize_oracle(const DenseTensor3& a);

}  // namespace t3
