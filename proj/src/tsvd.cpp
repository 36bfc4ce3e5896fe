#include "t3/tsvd.hpp"

#include <cmath>

#include "t3/spectral.hpp"
#include "t3/svd.hpp"

namespace t3 {

namespace {

// Slices 0 and p/2 of a real tensor's spectrum are real; dropping their
// rounding-level imaginary parts keeps their singular vectors real too.
ComplexMatrix realified(const ComplexMatrix& z) {
  ComplexMatrix r(z.rows(), z.cols());
  for (std::size_t t = 0; t < z.size(); ++t) r.data()[t] = z.data()[t].real();
  return r;
}

ComplexMatrix slice_for_svd(const SpectralTensor3& fa, std::size_t k) {
  const bool self_conjugate = k == 0 || 2 * k == fa.p;
  return self_conjugate ? realified(fa.slices[k]) : fa.slices[k];
}

SingularSpectrum average_spectrum(Matrix per_slice) {
  const std::size_t p = per_slice.rows(), r = per_slice.cols();
  SingularSpectrum spec{std::vector<double>(r, 0.0), std::move(per_slice)};
  for (std::size_t j = 0; j < r; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < p; ++k) sum += spec.per_slice(k, j);
    spec.values[j] = sum / static_cast<double>(p);
  }
  return spec;
}

}  // namespace

TsvdFactors tsvd(const DenseTensor3& a, Exec exec) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  const SpectralTensor3 fa = fft_mode3(a);
  SpectralTensor3 fu = SpectralTensor3::zeros(m, m, p);
  SpectralTensor3 fs = SpectralTensor3::zeros(m, n, p);
  SpectralTensor3 fv = SpectralTensor3::zeros(n, n, p);

  for_each_index(independent_slices(p), exec, [&](std::size_t k) {
    ComplexSvd svd = complex_svd(slice_for_svd(fa, k));
    for (std::size_t j = 0; j < svd.sigma.size(); ++j) fs.slices[k](j, j) = svd.sigma[j];
    fu.slices[k] = std::move(svd.u);
    fv.slices[k] = std::move(svd.v);
  });
  // Conjugate slices: U' = conj(U), same sigma, V' = conj(V).
  complete_conjugate_symmetry(fu);
  complete_conjugate_symmetry(fs);
  complete_conjugate_symmetry(fv);
  return TsvdFactors{ifft_mode3(fu), ifft_mode3(fs), ifft_mode3(fv)};
}

SingularSpectrum singular_values(const DenseTensor3& a, Exec exec) {
  const std::size_t p = a.depth(), r = a.min_dim();
  const SpectralTensor3 fa = fft_mode3(a);
  Matrix per_slice(p, r);
  for_each_index(independent_slices(p), exec, [&](std::size_t k) {
    const std::vector<double> sigma = complex_singular_values(slice_for_svd(fa, k));
    for (std::size_t j = 0; j < r; ++j) per_slice(k, j) = sigma[j];
  });
  for (std::size_t k = independent_slices(p); k < p; ++k) {
    for (std::size_t j = 0; j < r; ++j) per_slice(k, j) = per_slice(p - k, j);
  }
  return average_spectrum(std::move(per_slice));
}

double spectral_norm(const DenseTensor3& a, Exec exec) {
  return singular_values(a, exec).largest();
}

double f_diagonal_residue(const DenseTensor3& s) {
  double acc = 0.0;
  for (std::size_t k = 0; k < s.depth(); ++k) {
    for (std::size_t i = 0; i < s.rows(); ++i) {
      for (std::size_t j = 0; j < s.cols(); ++j) {
        if (i != j) acc += s(i, j, k) * s(i, j, k);
      }
    }
  }
  return std::sqrt(acc);
}

}  // namespace t3
