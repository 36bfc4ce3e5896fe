#pragma once

#include <vector>

#include "t3/matrix.hpp"

namespace t3 {

// Full SVD M = U diag(sigma) V^*, with U (a x a) and V (b x b) unitary and
// sigma (length min(a, b)) nonnegative and descending.
struct ComplexSvd {
  ComplexMatrix u;
  std::vector<double> sigma;
  ComplexMatrix v;
};

struct JacobiOptions {
  // Pair (j, k) is considered orthogonal once
  // |<w_j, w_k>| <= tolerance * ||w_j|| ||w_k||. 0 selects eps * rows.
  double tolerance = 0.0;
  // 0 selects max(60, 30 * min(a, b)).
  int max_sweeps = 0;
};

// One-sided (Hestenes) Jacobi SVD. Throws ConvergenceError when the sweep cap
// is reached; non-finite input is rejected with PreconditionError.
ComplexSvd complex_svd(const ComplexMatrix& m, const JacobiOptions& options = {});

// Singular values only; skips accumulating the singular vectors.
std::vector<double> complex_singular_values(const ComplexMatrix& m,
                                            const JacobiOptions& options = {});

}  // namespace t3
