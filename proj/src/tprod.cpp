#include "t3/tprod.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "t3/random.hpp"
#include "t3/svd.hpp"

namespace t3 {

namespace {

void require_conforming(const DenseTensor3& a, const DenseTensor3& b) {
  if (a.cols() != b.rows() || a.depth() != b.depth()) {
    throw DimensionError("tprod: cannot multiply " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + "x" + std::to_string(a.depth()) +
                         " by " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + "x" + std::to_string(b.depth()));
  }
}

bool self_conjugate(std::size_t k, std::size_t p) { return k == 0 || 2 * k == p; }

// Orthonormalizes the columns of z in place (modified Gram-Schmidt, two passes).
void orthonormalize_columns(ComplexMatrix& z) {
  for (std::size_t c = 0; c < z.cols(); ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < z.rows(); ++i) proj += std::conj(z(i, prev)) * z(i, c);
        for (std::size_t i = 0; i < z.rows(); ++i) z(i, c) -= proj * z(i, prev);
      }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < z.rows(); ++i) nrm += std::norm(z(i, c));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < z.rows(); ++i) z(i, c) /= nrm;
  }
}

}  // namespace

DenseTensor3 tprod(const DenseTensor3& a, const DenseTensor3& b, Exec exec) {
  require_conforming(a, b);
  const SpectralTensor3 fa = fft_mode3(a);
  const SpectralTensor3 fb = fft_mode3(b);
  SpectralTensor3 fc = SpectralTensor3::zeros(a.rows(), b.cols(), a.depth());
  for_each_index(independent_slices(a.depth()), exec, [&](std::size_t k) {
    fc.slices[k] = multiply(fa.slices[k], fb.slices[k]);
  });
  complete_conjugate_symmetry(fc);
  return ifft_mode3(fc);
}

DenseTensor3 tprod_bcirc(const DenseTensor3& a, const DenseTensor3& b) {
  require_conforming(a, b);
  return fold(multiply(bcirc(a), unfold(b)), a.rows(), a.depth());
}

SpectralTensor3 slice_product(const SpectralTensor3& a, const SpectralTensor3& b,
                              Exec exec) {
  if (a.n != b.m || a.p != b.p) throw DimensionError("slice_product: shapes differ");
  SpectralTensor3 c = SpectralTensor3::zeros(a.m, b.n, a.p);
  for_each_index(a.p, exec, [&](std::size_t k) {
    c.slices[k] = multiply(a.slices[k], b.slices[k]);
  });
  return c;
}

DenseTensor3 transpose(const DenseTensor3& a) {
  const std::size_t m = a.rows(), n = a.cols(), p = a.depth();
  DenseTensor3 t(n, m, p);
  for (std::size_t k = 0; k < p; ++k) {
    const std::size_t src = (p - k) % p;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) t(j, i, k) = a(i, j, src);
    }
  }
  return t;
}

DenseTensor3 identity(std::size_t n, std::size_t p) {
  DenseTensor3 id(n, n, p);
  for (std::size_t i = 0; i < n; ++i) id(i, i, 0) = 1.0;
  return id;
}

DenseTensor3 inverse(const DenseTensor3& a, Exec exec) {
  if (a.rows() != a.cols()) throw DimensionError("inverse: tensor is not square");
  const std::size_t n = a.rows(), p = a.depth();
  const SpectralTensor3 fa = fft_mode3(a);
  SpectralTensor3 fi = SpectralTensor3::zeros(n, n, p);
  for_each_index(independent_slices(p), exec, [&](std::size_t k) {
    const ComplexSvd svd = complex_svd(fa.slices[k]);
    const double largest = svd.sigma.front();
    const double smallest = svd.sigma.back();
    if (largest == 0.0 || smallest <= 1e-12 * largest) {
      const double cond = smallest > 0.0 ? largest / smallest
                                         : std::numeric_limits<double>::infinity();
      throw SingularSliceError(k + 1, cond);
    }
    ComplexMatrix& out = fi.slices[k];
    // V diag(1/sigma) U^*
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Complex s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          s += svd.v(i, r) * (1.0 / svd.sigma[r]) * std::conj(svd.u(j, r));
        }
        out(i, j) = s;
      }
    }
  });
  complete_conjugate_symmetry(fi);
  return ifft_mode3(fi);
}

double orthogonality_defect(const DenseTensor3& q) {
  const DenseTensor3 gram = tprod(transpose(q), q);
  const DenseTensor3 diff = gram - identity(q.cols(), q.depth());
  return frobenius_norm(diff) / std::sqrt(static_cast<double>(q.cols() * q.depth()));
}

bool is_partially_orthogonal(const DenseTensor3& q, double tol) {
  if (q.cols() > q.rows()) return false;
  return orthogonality_defect(q) <= tol;
}

bool is_orthogonal(const DenseTensor3& q, double tol) {
  if (q.rows() != q.cols()) return false;
  return orthogonality_defect(q) <= tol && orthogonality_defect(transpose(q)) <= tol;
}

DenseTensor3 random_orthogonal(std::size_t m, std::size_t k, std::size_t p,
                               std::uint64_t seed) {
  if (k == 0 || k > m) {
    throw DimensionError("random_orthogonal: need 1 <= k <= m");
  }
  Rng rng(seed);
  SpectralTensor3 s = SpectralTensor3::zeros(m, k, p);
  for (std::size_t slice = 0; slice < independent_slices(p); ++slice) {
    ComplexMatrix z = gaussian_complex_matrix(m, k, rng, self_conjugate(slice, p));
    orthonormalize_columns(z);
    s.slices[slice] = std::move(z);
  }
  complete_conjugate_symmetry(s);
  return ifft_mode3(s);
}

}  // namespace t3
