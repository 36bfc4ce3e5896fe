#pragma once

#include <cstdint>
#include <random>

#include "t3/matrix.hpp"
#include "t3/tensor.hpp"

namespace t3 {

// Seeded standard-normal source. The same seed yields the same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  std::uint64_t next_seed() { return engine_(); }
  // Uniform integer in [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// Per-trial stream seed: seed XOR trial index.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return seed ^ trial;
}

DenseTensor3 gaussian_tensor(std::size_t m, std::size_t n, std::size_t p, Rng& rng);
DenseTensor3 gaussian_tensor(std::size_t m, std::size_t n, std::size_t p,
                             std::uint64_t seed);

// Gaussian entries on the diagonal of every frontal slice, zeros elsewhere.
DenseTensor3 f_diagonal_tensor(std::size_t m, std::size_t n, std::size_t p,
                               std::uint64_t seed);

ComplexMatrix gaussian_complex_matrix(std::size_t rows, std::size_t cols, Rng& rng,
                                      bool real_only = false);

}  // namespace t3
