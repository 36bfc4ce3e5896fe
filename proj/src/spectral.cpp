#include "t3/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "t3/parallel.hpp"

namespace t3 {

namespace {

// FFTW's planner is not thread-safe; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}

// In-place transform of all m*n tubes of a slice-major complex buffer.
void transform_tubes(std::vector<Complex>& buffer, std::size_t tubes,
                     std::size_t p, int sign) {
  if (p == 1) return;
  auto* data = reinterpret_cast<fftw_complex*>(buffer.data());
  const int len = static_cast<int>(p);
  const int stride = static_cast<int>(tubes);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_many_dft(1, &len, static_cast<int>(tubes), data, nullptr,
                              stride, 1, data, nullptr, stride, 1, sign,
                              FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

std::vector<Complex> pack(const SpectralTensor3& s) {
  const std::size_t mn = s.m * s.n;
  std::vector<Complex> buf(mn * s.p);
  for (std::size_t k = 0; k < s.p; ++k) {
    std::copy(s.slices[k].data().begin(), s.slices[k].data().end(),
              buf.begin() + static_cast<std::ptrdiff_t>(k * mn));
  }
  return buf;
}

}  // namespace

SpectralTensor3 SpectralTensor3::zeros(std::size_t m, std::size_t n, std::size_t p) {
  SpectralTensor3 s{m, n, p, {}};
  s.slices.assign(p, ComplexMatrix(m, n));
  return s;
}

DftPlan::DftPlan(std::size_t p) : p_(p) {
  if (p == 0) throw DimensionError("DFT length must be positive");
}

Complex DftPlan::power(std::size_t e) const {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(e % p_) /
                       static_cast<double>(p_);
  return {std::cos(angle), std::sin(angle)};
}

double frobenius_norm(const SpectralTensor3& s) {
  double acc = 0.0;
  for (const auto& slice : s.slices) {
    for (const Complex& v : slice.data()) acc += std::norm(v);
  }
  return std::sqrt(acc);
}

double conjugate_symmetry_defect(const SpectralTensor3& s) {
  double acc = 0.0;
  for (std::size_t k = 0; k < independent_slices(s.p); ++k) {
    const auto a = s.slices[k].data();
    const auto b = s.slices[(s.p - k) % s.p].data();
    for (std::size_t t = 0; t < a.size(); ++t) acc += std::norm(a[t] - std::conj(b[t]));
  }
  return std::sqrt(acc);
}

void complete_conjugate_symmetry(SpectralTensor3& s) {
  for (std::size_t k = independent_slices(s.p); k < s.p; ++k) {
    const auto src = s.slices[s.p - k].data();
    auto dst = s.slices[k].data();
    for (std::size_t t = 0; t < src.size(); ++t) dst[t] = std::conj(src[t]);
  }
}

SpectralTensor3 fft_mode3(const DenseTensor3& a) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  std::vector<Complex> buf(a.values().begin(), a.values().end());
  transform_tubes(buf, m * n, p, FFTW_FORWARD);
  SpectralTensor3 s = SpectralTensor3::zeros(m, n, p);
  for (std::size_t k = 0; k < p; ++k) {
    std::copy_n(buf.begin() + static_cast<std::ptrdiff_t>(k * m * n), m * n,
                s.slices[k].data().begin());
  }
  return s;
}

DenseTensor3 ifft_mode3(const SpectralTensor3& s) {
  if (s.slices.size() != s.p) throw DimensionError("spectrum slice count differs from p");
  const double threshold = 1e-8 * frobenius_norm(s);
  const double defect = conjugate_symmetry_defect(s);
  if (defect > threshold) throw SymmetryError(defect, threshold);

  std::vector<Complex> buf = pack(s);
  transform_tubes(buf, s.m * s.n, s.p, FFTW_BACKWARD);
  DenseTensor3 a(s.m, s.n, s.p);
  const double inv_p = 1.0 / static_cast<double>(s.p);
  for (std::size_t t = 0; t < buf.size(); ++t) a.values()[t] = buf[t].real() * inv_p;
  return a;
}

SpectralTensor3 naive_dft_mode3(const DenseTensor3& a) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  const DftPlan plan(p);
  SpectralTensor3 s = SpectralTensor3::zeros(m, n, p);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t t = 0; t < p; ++t) {
      const Complex w = plan.power(k * t);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) s.slices[k](i, j) += w * a(i, j, t);
      }
    }
  }
  return s;
}

std::vector<ComplexMatrix> block_diagonalize_oracle(const DenseTensor3& a) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  const DftPlan plan(p);
  ComplexMatrix left(m * p, m * p);   // F_p (x) I_m
  ComplexMatrix right(n * p, n * p);  // F_p^{-1} (x) I_n
  const double inv_p = 1.0 / static_cast<double>(p);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) {
      const Complex w = plan.power(r * c);
      for (std::size_t i = 0; i < m; ++i) left(r * m + i, c * m + i) = w;
      for (std::size_t j = 0; j < n; ++j) right(r * n + j, c * n + j) = std::conj(w) * inv_p;
    }
  }
  const ComplexMatrix full = multiply(multiply(left, to_complex(bcirc(a))), right);
  std::vector<ComplexMatrix> blocks(p, ComplexMatrix(m, n));
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) blocks[k](i, j) = full(k * m + i, k * n + j);
    }
  }
  return blocks;
}

}  // namespace t3
