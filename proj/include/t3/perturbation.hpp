#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "t3/parallel.hpp"
#include "t3/tensor.hpp"

namespace t3 {

enum class Status { pass, fail, vacuous };

std::string_view status_name(Status s);

// One inequality lhs <= rhs. slack = rhs - lhs and the record passes iff
// slack >= -tolerance. Equalities are recorded as |x - y| <= 0.
struct CheckRecord {
  std::string inequality;
  std::size_t i = 0;  // 1-based index parameters, 0 when unused
  std::size_t j = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  Status status = Status::vacuous;
};

struct InstanceInfo {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  std::optional<std::uint64_t> seed;
  std::size_t trial = 0;
  std::string note;
};

struct CheckReport {
  std::string theorem;
  InstanceInfo instance;
  std::vector<CheckRecord> records;

  bool passed() const;
  std::size_t count(Status s) const;
};

struct CheckOptions {
  // Inequality tolerance is rel_tol * (1 + max(|lhs|, |rhs|)).
  double rel_tol = 1e-9;
  // Norm identities: |x - y| <= equality_tol * max(|x|, |y|).
  double equality_tol = 1e-10;
  Exec exec = Exec::serial;
};

// alpha_j >= beta_j for j <= min(|rows|, |cols|) and
// beta_j >= alpha_{j + (m - |rows|) + (n - |cols|)} for
// j <= min(|rows| + |cols| - m, |rows| + |cols| - n), where beta are the
// singular values of subtensor(A, rows, cols). An empty second range is
// recorded as a single vacuous record.
CheckReport check_interlacing(const DenseTensor3& a, const IndexSubset& rows,
                              const IndexSubset& cols, const CheckOptions& opts = {});

// B = [A, M] for tall A (m > n): sigma_max(B) >= sigma_max(A) and
// sigma_min(B) <= sigma_min(A). The smallest value of each tensor is its last
// defined one, i.e. alpha_n of A against beta_{min(m, n+1)} of B.
CheckReport check_slice_append(const DenseTensor3& a, const DenseTensor3& m,
                               const CheckOptions& opts = {});

// sqrt(sum_j (alpha_j - beta_j)^2) <= ||B - A||_F once, and
// |alpha_j - beta_j| <= spectral_norm(B - A) for every j.
CheckReport check_mirsky(const DenseTensor3& a, const DenseTensor3& b,
                         const CheckOptions& opts = {});

// The four sum/product bounds at a single (i, j); the two i+j-1 bounds are
// vacuous when i + j - 1 > min(m, n).
CheckReport check_sum_product(const DenseTensor3& a, const DenseTensor3& b,
                              std::size_t i, std::size_t j,
                              const CheckOptions& opts = {});

// Every valid (i, j) pair plus the sigma_max / sigma_min corollaries.
CheckReport check_sum_product_all(const DenseTensor3& a, const DenseTensor3& b,
                                  const CheckOptions& opts = {});

// sigma_i(U^T * A * V) <= sigma_i(A), i = 1..k, for partially orthogonal
// U (m x k x p) and V (n x k x p). Throws PreconditionError when U or V is not
// partially orthogonal at 1e-8.
CheckReport check_compression(const DenseTensor3& a, const DenseTensor3& u,
                              const DenseTensor3& v, const CheckOptions& opts = {});

// sigma_i(U * B * V) <= p^2 sigma_i(B) sigma_max(U) sigma_max(V) for
// arbitrary U (m x m x p), V (n x n x p).
CheckReport check_multiplicative(const DenseTensor3& b, const DenseTensor3& u,
                                 const DenseTensor3& v, const CheckOptions& opts = {});

// ||Q * A||_F = ||A||_F for orthogonal Q, and ||A||_F = ||fft(A)||_F / sqrt(p).
CheckReport check_norm_identities(const DenseTensor3& a, const DenseTensor3& q,
                                  const CheckOptions& opts = {});

// Seeded trial runner.

enum class Theorem {
  interlacing,
  slice_append,
  mirsky,
  sum_product,
  compression,
  multiplicative,
  norm_identities,
};

inline constexpr Theorem kAllTheorems[] = {
    Theorem::interlacing, Theorem::slice_append,   Theorem::mirsky,
    Theorem::sum_product, Theorem::compression,    Theorem::multiplicative,
    Theorem::norm_identities,
};

std::string_view theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);

// Throws PreconditionError when the dimensions cannot host the theorem.
void validate_dims(Theorem t, std::size_t m, std::size_t n, std::size_t p);

// Builds the instance for (seed, trial) from trial_seed(seed, trial) and runs
// the checker. Identical arguments give identical reports.
CheckReport run_trial(Theorem t, std::size_t m, std::size_t n, std::size_t p,
                      std::uint64_t seed, std::size_t trial,
                      const CheckOptions& opts = {});

struct TrialPlan {
  Theorem theorem = Theorem::mirsky;
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t p = 1;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  CheckOptions options;
  // Trials are independent; reports come back ordered by trial index.
  Exec exec = Exec::parallel;
};

std::vector<CheckReport> run_trials(const TrialPlan& plan);

}  // namespace t3
