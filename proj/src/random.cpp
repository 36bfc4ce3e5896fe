#include "t3/random.hpp"

namespace t3 {

DenseTensor3 gaussian_tensor(std::size_t m, std::size_t n, std::size_t p, Rng& rng) {
  DenseTensor3 a(m, n, p);
  for (double& v : a.values()) v = rng.normal();
  return a;
}

DenseTensor3 gaussian_tensor(std::size_t m, std::size_t n, std::size_t p,
                             std::uint64_t seed) {
  Rng rng(seed);
  return gaussian_tensor(m, n, p, rng);
}

DenseTensor3 f_diagonal_tensor(std::size_t m, std::size_t n, std::size_t p,
                               std::uint64_t seed) {
  Rng rng(seed);
  DenseTensor3 a(m, n, p);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t i = 0; i < a.min_dim(); ++i) a(i, i, k) = rng.normal();
  }
  return a;
}

ComplexMatrix gaussian_complex_matrix(std::size_t rows, std::size_t cols, Rng& rng,
                                      bool real_only) {
  ComplexMatrix z(rows, cols);
  for (Complex& v : z.data()) {
    const double re = rng.normal();
    const double im = real_only ? 0.0 : rng.normal();
    v = {re, im};
  }
  return z;
}

}  // namespace t3
