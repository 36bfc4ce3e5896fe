#include "t3/svd.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace t3 {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Column-major working copy; column j occupies [j*rows, (j+1)*rows).
struct Columns {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  Complex* col(std::size_t j) { return data.data() + j * rows; }
  const Complex* col(std::size_t j) const { return data.data() + j * rows; }
};

Columns columns_of(const ComplexMatrix& m, bool adjoint_first) {
  Columns w;
  if (!adjoint_first) {
    w.rows = m.rows();
    w.cols = m.cols();
    w.data.resize(w.rows * w.cols);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) w.data[j * w.rows + i] = m(i, j);
  } else {
    w.rows = m.cols();
    w.cols = m.rows();
    w.data.resize(w.rows * w.cols);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) w.data[i * w.rows + j] = std::conj(m(i, j));
  }
  return w;
}

Columns identity_columns(std::size_t n) {
  Columns v{n, n, std::vector<Complex>(n * n)};
  for (std::size_t j = 0; j < n; ++j) v.col(j)[j] = 1.0;
  return v;
}

double squared_norm(const Complex* x, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) s += std::norm(x[i]);
  return s;
}

Complex inner(const Complex* x, const Complex* y, std::size_t len) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < len; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

// x <- c x - s y',  y <- s x + c y',  with y' = conj(phase) y.
void rotate(Complex* x, Complex* y, std::size_t len, double c, double s, Complex phase) {
  const Complex ph = std::conj(phase);
  for (std::size_t i = 0; i < len; ++i) {
    const Complex xi = x[i];
    const Complex yi = ph * y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

// Orthogonalizes the columns of w in place, applying the same rotations to v
// when given. Requires w.rows >= w.cols.
void hestenes_sweeps(Columns& w, Columns* v, const JacobiOptions& options) {
  const std::size_t n = w.cols;
  const double tol = options.tolerance > 0.0
                         ? options.tolerance
                         : kEps * static_cast<double>(std::max<std::size_t>(w.rows, 1));
  const int cap = options.max_sweeps > 0
                      ? options.max_sweeps
                      : std::max(60, 30 * static_cast<int>(n));
  for (int sweep = 0; sweep < cap; ++sweep) {
    bool rotated = false;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double alpha = squared_norm(w.col(j), w.rows);
        const double beta = squared_norm(w.col(k), w.rows);
        const Complex gamma = inner(w.col(j), w.col(k), w.rows);
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= tol * std::sqrt(alpha) * std::sqrt(beta)) continue;
        rotated = true;
        const Complex phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        double t;
        if (std::abs(zeta) > 1e150) {
          t = 0.5 / zeta;
        } else {
          t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        rotate(w.col(j), w.col(k), w.rows, c, s, phase);
        if (v != nullptr) rotate(v->col(j), v->col(k), v->rows, c, s, phase);
      }
    }
    if (!rotated) return;
  }
  throw ConvergenceError("one-sided Jacobi SVD did not converge in " +
                         std::to_string(cap) + " sweeps");
}

void require_finite(const ComplexMatrix& m) {
  for (const Complex& z : m.data()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw PreconditionError("complex_svd: input contains non-finite entries");
    }
  }
}

std::vector<std::size_t> descending_order(const std::vector<double>& sigma) {
  std::vector<std::size_t> order(sigma.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });
  return order;
}

// Extends the orthonormal columns [0, filled) of q to a full unitary basis by
// Gram-Schmidt on the standard basis vectors, greedily taking the candidate
// with the largest residual.
void complete_basis(ComplexMatrix& q, std::size_t filled) {
  const std::size_t a = q.rows();
  std::vector<Complex> best(a), cand(a);
  for (std::size_t col = filled; col < a; ++col) {
    double best_norm = -1.0;
    for (std::size_t e = 0; e < a; ++e) {
      std::fill(cand.begin(), cand.end(), Complex{0.0});
      cand[e] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t c = 0; c < col; ++c) {
          Complex proj = 0.0;
          for (std::size_t i = 0; i < a; ++i) proj += std::conj(q(i, c)) * cand[i];
          for (std::size_t i = 0; i < a; ++i) cand[i] -= proj * q(i, c);
        }
      }
      double nrm = 0.0;
      for (const Complex& z : cand) nrm += std::norm(z);
      nrm = std::sqrt(nrm);
      if (nrm > best_norm) {
        best_norm = nrm;
        best = cand;
      }
    }
    for (std::size_t i = 0; i < a; ++i) q(i, col) = best[i] / best_norm;
  }
}

// Tall-case factorization of the column set w (rows >= cols).
ComplexSvd tall_svd(Columns w, const JacobiOptions& options) {
  const std::size_t a = w.rows, b = w.cols;
  Columns v = identity_columns(b);
  hestenes_sweeps(w, &v, options);

  std::vector<double> norms(b);
  for (std::size_t j = 0; j < b; ++j) norms[j] = std::sqrt(squared_norm(w.col(j), a));
  const auto order = descending_order(norms);

  ComplexSvd out{ComplexMatrix(a, a), std::vector<double>(b), ComplexMatrix(b, b)};
  const double sigma_max = b > 0 ? norms[order[0]] : 0.0;
  const double negligible = sigma_max * kEps * static_cast<double>(b);
  std::size_t filled = 0;
  for (std::size_t r = 0; r < b; ++r) {
    const std::size_t j = order[r];
    out.sigma[r] = norms[j];
    for (std::size_t i = 0; i < b; ++i) out.v(i, r) = v.col(j)[i];
    if (norms[j] > negligible && norms[j] > 0.0 && filled == r) {
      for (std::size_t i = 0; i < a; ++i) out.u(i, r) = w.col(j)[i] / norms[j];
      ++filled;
    }
  }
  complete_basis(out.u, filled);
  return out;
}

}  // namespace

ComplexSvd complex_svd(const ComplexMatrix& m, const JacobiOptions& options) {
  require_finite(m);
  if (m.rows() >= m.cols()) return tall_svd(columns_of(m, false), options);
  // M^* = U' S V'^*  =>  M = V' S U'^*.
  ComplexSvd t = tall_svd(columns_of(m, true), options);
  return ComplexSvd{std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

std::vector<double> complex_singular_values(const ComplexMatrix& m,
                                            const JacobiOptions& options) {
  require_finite(m);
  Columns w = columns_of(m, m.rows() < m.cols());
  hestenes_sweeps(w, nullptr, options);
  std::vector<double> sigma(w.cols);
  for (std::size_t j = 0; j < w.cols; ++j) sigma[j] = std::sqrt(squared_norm(w.col(j), w.rows));
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

}  // namespace t3
