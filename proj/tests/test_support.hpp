#pragma once

// Shared helpers and independent oracles for the test suites. The oracles go
// through Eigen's eigensolver / divide-and-conquer SVD and the quadratic DFT,
// never through the Jacobi SVD or FFTW paths they check.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "t3/matrix.hpp"
#include "t3/spectral.hpp"
#include "t3/tensor.hpp"

namespace t3::testing {

inline double max_abs_diff(const DenseTensor3& x, const DenseTensor3& y) {
  double d = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    d = std::max(d, std::abs(x.values()[t] - y.values()[t]));
  }
  return d;
}

inline double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
  double d = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) d = std::max(d, std::abs(x.data()[t] - y.data()[t]));
  return d;
}

inline double max_abs_diff(const std::vector<ComplexMatrix>& x,
                           const std::vector<ComplexMatrix>& y) {
  double d = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) d = std::max(d, max_abs_diff(x[k], y[k]));
  return d;
}

// ||x - y||_F / max(||y||_F, tiny)
inline double rel_error(const DenseTensor3& x, const DenseTensor3& y) {
  const double denom = std::max(frobenius_norm(y), 1e-300);
  return frobenius_norm(x - y) / denom;
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

// Singular values as square roots of the eigenvalues of the smaller Gram
// matrix, descending.
inline std::vector<double> gram_singular_values(const ComplexMatrix& m) {
  const Eigen::MatrixXcd e = to_eigen(m);
  const Eigen::MatrixXcd gram = m.rows() >= m.cols() ? Eigen::MatrixXcd(e.adjoint() * e)
                                                     : Eigen::MatrixXcd(e * e.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  std::vector<double> s;
  for (Eigen::Index t = 0; t < solver.eigenvalues().size(); ++t) {
    s.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(t))));
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

inline std::vector<double> bdc_singular_values(const ComplexMatrix& m) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

inline std::vector<double> bdc_singular_values(const Matrix& m) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

// Tensor singular values through the quadratic DFT and Eigen's SVD.
inline std::vector<double> oracle_tensor_singular_values(const DenseTensor3& a) {
  const SpectralTensor3 s = naive_dft_mode3(a);
  std::vector<double> avg(a.min_dim(), 0.0);
  for (const ComplexMatrix& slice : s.slices) {
    const std::vector<double> sv = bdc_singular_values(slice);
    for (std::size_t j = 0; j < avg.size(); ++j) avg[j] += sv[j];
  }
  for (double& v : avg) v /= static_cast<double>(a.depth());
  return avg;
}

inline double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double d = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) d = std::max(d, std::abs(x[t] - y[t]));
  return d;
}

}  // namespace t3::testing
