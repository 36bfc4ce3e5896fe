#include "t3/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "t3/random.hpp"
#include "t3/spectral.hpp"
#include "t3/tprod.hpp"
#include "t3/tsvd.hpp"

namespace t3 {

namespace {

CheckRecord bound(std::string name, std::size_t i, std::size_t j, double lhs,
                  double rhs, double rel_tol) {
  CheckRecord r{std::move(name), i, j, lhs, rhs, rhs - lhs, 0.0, Status::pass};
  r.tolerance = rel_tol * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
  r.status = r.slack >= -r.tolerance ? Status::pass : Status::fail;
  return r;
}

CheckRecord vacuous(std::string name, std::size_t i = 0, std::size_t j = 0) {
  return CheckRecord{std::move(name), i, j, 0.0, 0.0, 0.0, 0.0, Status::vacuous};
}

CheckRecord equality(std::string name, double x, double y, double rel_tol) {
  const double lhs = std::abs(x - y);
  CheckRecord r{std::move(name), 0, 0, lhs, 0.0, 0.0 - lhs, 0.0, Status::pass};
  r.tolerance = rel_tol * std::max(std::abs(x), std::abs(y));
  r.status = r.slack >= -r.tolerance ? Status::pass : Status::fail;
  return r;
}

InstanceInfo info_of(const DenseTensor3& a) {
  return InstanceInfo{a.rows(), a.cols(), a.depth(), std::nullopt, 0, {}};
}

void require_same_shape(const DenseTensor3& a, const DenseTensor3& b, const char* what) {
  if (!a.same_shape(b)) throw DimensionError(std::string(what) + ": tensor shapes differ");
}

void append_sum_product_pair(std::vector<CheckRecord>& out, const SingularSpectrum& sa,
                             const SingularSpectrum& sb, const SingularSpectrum& ssum,
                             const SingularSpectrum& sprod, std::size_t depth,
                             std::size_t i, std::size_t j, double rel_tol) {
  const std::size_t r = sa.values.size();
  const double p = static_cast<double>(depth);
  if (i + j - 1 <= r) {
    out.push_back(bound("sum-weyl", i, j, ssum[i + j - 1], sa[i] + sb[j], rel_tol));
    out.push_back(bound("product-weyl", i, j, sprod[i + j - 1], p * sa[i] * sb[j], rel_tol));
  } else {
    out.push_back(vacuous("sum-weyl", i, j));
    out.push_back(vacuous("product-weyl", i, j));
  }
}

void append_single_index(std::vector<CheckRecord>& out, const SingularSpectrum& sa,
                         const SingularSpectrum& sb, const SingularSpectrum& ssum,
                         const SingularSpectrum& sprod, std::size_t depth,
                         std::size_t i, double rel_tol) {
  const double p = static_cast<double>(depth);
  out.push_back(bound("sum-perturbation", i, 0, std::abs(ssum[i] - sa[i]), sb[1], rel_tol));
  out.push_back(bound("product-bound", i, 0, sprod[i], p * sa[i] * sb[1], rel_tol));
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
  }
  return "unknown";
}

bool CheckReport::passed() const { return count(Status::fail) == 0; }

std::size_t CheckReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

CheckReport check_interlacing(const DenseTensor3& a, const IndexSubset& rows,
                              const IndexSubset& cols, const CheckOptions& opts) {
  const DenseTensor3 b = subtensor(a, rows, cols);
  const SingularSpectrum alpha = singular_values(a, opts.exec);
  const SingularSpectrum beta = singular_values(b, opts.exec);
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t pr = rows.size(), qc = cols.size();

  CheckReport rep{"interlacing", info_of(a), {}};
  std::ostringstream note;
  note << "subtensor " << pr << "x" << qc;
  rep.instance.note = note.str();

  for (std::size_t j = 1; j <= std::min(pr, qc); ++j) {
    rep.records.push_back(bound("interlacing-upper", 0, j, beta[j], alpha[j], opts.rel_tol));
  }
  // min(p+q-m, p+q-n) may be <= 0; work in signed arithmetic.
  const long long span_lower =
      std::min(static_cast<long long>(pr + qc) - static_cast<long long>(m),
               static_cast<long long>(pr + qc) - static_cast<long long>(n));
  const std::size_t shift = (m - pr) + (n - qc);
  if (span_lower < 1) {
    rep.records.push_back(vacuous("interlacing-lower"));
  } else {
    for (std::size_t j = 1; j <= static_cast<std::size_t>(span_lower); ++j) {
      rep.records.push_back(
          bound("interlacing-lower", 0, j, alpha[j + shift], beta[j], opts.rel_tol));
    }
  }
  return rep;
}

CheckReport check_slice_append(const DenseTensor3& a, const DenseTensor3& m,
                               const CheckOptions& opts) {
  if (a.rows() <= a.cols()) {
    throw PreconditionError("slice-append requires a tall tensor (m > n)");
  }
  const DenseTensor3 b = concat_lateral(a, m);
  const SingularSpectrum sa = singular_values(a, opts.exec);
  const SingularSpectrum sb = singular_values(b, opts.exec);
  CheckReport rep{"slice-append", info_of(a), {}};
  rep.instance.note = "sigma_min compares alpha_" + std::to_string(sa.values.size()) +
                      " of A with beta_" + std::to_string(sb.values.size()) + " of [A, M]";
  rep.records.push_back(bound("append-max", 0, 0, sa.largest(), sb.largest(), opts.rel_tol));
  rep.records.push_back(bound("append-min", 0, 0, sb.smallest(), sa.smallest(), opts.rel_tol));
  return rep;
}

CheckReport check_mirsky(const DenseTensor3& a, const DenseTensor3& b,
                         const CheckOptions& opts) {
  require_same_shape(a, b, "check_mirsky");
  const SingularSpectrum alpha = singular_values(a, opts.exec);
  const SingularSpectrum beta = singular_values(b, opts.exec);
  const DenseTensor3 diff = b - a;
  const double diff_fro = frobenius_norm(diff);
  const double diff_spec = spectral_norm(diff, opts.exec);

  CheckReport rep{"mirsky", info_of(a), {}};
  double sq = 0.0;
  for (std::size_t j = 0; j < alpha.values.size(); ++j) {
    const double d = alpha.values[j] - beta.values[j];
    sq += d * d;
  }
  rep.records.push_back(bound("mirsky-frobenius", 0, 0, std::sqrt(sq), diff_fro, opts.rel_tol));
  for (std::size_t j = 1; j <= alpha.values.size(); ++j) {
    rep.records.push_back(
        bound("mirsky-spectral", 0, j, std::abs(alpha[j] - beta[j]), diff_spec, opts.rel_tol));
  }
  return rep;
}

CheckReport check_sum_product(const DenseTensor3& a, const DenseTensor3& b,
                              std::size_t i, std::size_t j, const CheckOptions& opts) {
  require_same_shape(a, b, "check_sum_product");
  const std::size_t r = a.min_dim();
  if (i < 1 || i > r || j < 1 || j > r) {
    throw IndexError("check_sum_product: indices must lie in [1, min(m, n)]");
  }
  const SingularSpectrum sa = singular_values(a, opts.exec);
  const SingularSpectrum sb = singular_values(b, opts.exec);
  const SingularSpectrum ssum = singular_values(a + b, opts.exec);
  const SingularSpectrum sprod = singular_values(tprod(a, transpose(b), opts.exec), opts.exec);
  CheckReport rep{"sum-product", info_of(a), {}};
  append_sum_product_pair(rep.records, sa, sb, ssum, sprod, a.depth(), i, j, opts.rel_tol);
  append_single_index(rep.records, sa, sb, ssum, sprod, a.depth(), i, opts.rel_tol);
  return rep;
}

CheckReport check_sum_product_all(const DenseTensor3& a, const DenseTensor3& b,
                                  const CheckOptions& opts) {
  require_same_shape(a, b, "check_sum_product_all");
  const std::size_t r = a.min_dim();
  const SingularSpectrum sa = singular_values(a, opts.exec);
  const SingularSpectrum sb = singular_values(b, opts.exec);
  const SingularSpectrum ssum = singular_values(a + b, opts.exec);
  const SingularSpectrum sprod = singular_values(tprod(a, transpose(b), opts.exec), opts.exec);
  CheckReport rep{"sum-product", info_of(a), {}};
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; i + j - 1 <= r; ++j) {
      append_sum_product_pair(rep.records, sa, sb, ssum, sprod, a.depth(), i, j, opts.rel_tol);
    }
  }
  for (std::size_t i = 1; i <= r; ++i) {
    append_single_index(rep.records, sa, sb, ssum, sprod, a.depth(), i, opts.rel_tol);
  }
  rep.records.push_back(bound("sum-max", 1, 1, ssum.largest(), sa.largest() + sb.largest(),
                              opts.rel_tol));
  rep.records.push_back(bound("sum-min", r, 0, sa.smallest() - sb.largest(), ssum.smallest(),
                              opts.rel_tol));
  return rep;
}

CheckReport check_compression(const DenseTensor3& a, const DenseTensor3& u,
                              const DenseTensor3& v, const CheckOptions& opts) {
  const std::size_t k = u.cols();
  if (u.rows() != a.rows() || v.rows() != a.cols() || v.cols() != k ||
      u.depth() != a.depth() || v.depth() != a.depth()) {
    throw DimensionError("check_compression: U must be m x k x p and V n x k x p");
  }
  if (k > a.min_dim()) throw DimensionError("check_compression: k exceeds min(m, n)");
  if (!is_partially_orthogonal(u, 1e-8) || !is_partially_orthogonal(v, 1e-8)) {
    throw PreconditionError("check_compression: U and V must be partially orthogonal");
  }
  const DenseTensor3 c = tprod(tprod(transpose(u), a, opts.exec), v, opts.exec);
  const SingularSpectrum sa = singular_values(a, opts.exec);
  const SingularSpectrum sc = singular_values(c, opts.exec);
  CheckReport rep{"compression", info_of(a), {}};
  rep.instance.note = "k=" + std::to_string(k);
  for (std::size_t i = 1; i <= k; ++i) {
    rep.records.push_back(bound("compression", i, 0, sc[i], sa[i], opts.rel_tol));
  }
  return rep;
}

CheckReport check_multiplicative(const DenseTensor3& b, const DenseTensor3& u,
                                 const DenseTensor3& v, const CheckOptions& opts) {
  if (u.rows() != b.rows() || u.cols() != b.rows() || v.rows() != b.cols() ||
      v.cols() != b.cols() || u.depth() != b.depth() || v.depth() != b.depth()) {
    throw DimensionError("check_multiplicative: U must be m x m x p and V n x n x p");
  }
  const DenseTensor3 perturbed = tprod(tprod(u, b, opts.exec), v, opts.exec);
  const SingularSpectrum sb = singular_values(b, opts.exec);
  const SingularSpectrum sp = singular_values(perturbed, opts.exec);
  const double factor = static_cast<double>(b.depth() * b.depth()) *
                        spectral_norm(u, opts.exec) * spectral_norm(v, opts.exec);
  CheckReport rep{"multiplicative", info_of(b), {}};
  for (std::size_t i = 1; i <= sb.values.size(); ++i) {
    rep.records.push_back(bound("multiplicative", i, 0, sp[i], factor * sb[i], opts.rel_tol));
  }
  return rep;
}

CheckReport check_norm_identities(const DenseTensor3& a, const DenseTensor3& q,
                                  const CheckOptions& opts) {
  if (q.rows() != a.rows() || q.depth() != a.depth()) {
    throw DimensionError("check_norm_identities: Q must be m x m x p");
  }
  if (!is_orthogonal(q, 1e-8)) {
    throw PreconditionError("check_norm_identities: Q is not orthogonal");
  }
  const double norm_a = frobenius_norm(a);
  const double norm_qa = frobenius_norm(tprod(q, a, opts.exec));
  const double norm_hat = frobenius_norm(fft_mode3(a)) / std::sqrt(static_cast<double>(a.depth()));
  CheckReport rep{"norm-identities", info_of(a), {}};
  rep.records.push_back(equality("orthogonal-invariance", norm_qa, norm_a, opts.equality_tol));
  rep.records.push_back(equality("parseval", norm_a, norm_hat, opts.equality_tol));
  return rep;
}

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::interlacing: return "interlacing";
    case Theorem::slice_append: return "slice-append";
    case Theorem::mirsky: return "mirsky";
    case Theorem::sum_product: return "sum-product";
    case Theorem::compression: return "compression";
    case Theorem::multiplicative: return "multiplicative";
    case Theorem::norm_identities: return "norm-identities";
  }
  return "unknown";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : kAllTheorems) {
    if (theorem_name(t) == name) return t;
  }
  return std::nullopt;
}

void validate_dims(Theorem t, std::size_t m, std::size_t n, std::size_t p) {
  if (m == 0 || n == 0 || p == 0) throw PreconditionError("dimensions must be positive");
  if (t == Theorem::slice_append && m <= n) {
    throw PreconditionError("slice-append needs m > n");
  }
}

namespace {

IndexSubset random_subset(Mode kind, std::size_t extent, Rng& rng) {
  const std::size_t size = rng.uniform(1, extent);
  std::vector<std::size_t> pool(extent);
  std::iota(pool.begin(), pool.end(), std::size_t{1});
  std::shuffle(pool.begin(), pool.end(), rng.engine());
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return IndexSubset(kind, std::move(pool));
}

// Near-identical, moderately separated, and independent pairs in rotation.
constexpr double kMirskyScales[] = {1e-8, 1e-2, 0.0};

}  // namespace

CheckReport run_trial(Theorem t, std::size_t m, std::size_t n, std::size_t p,
                      std::uint64_t seed, std::size_t trial, const CheckOptions& opts) {
  validate_dims(t, m, n, p);
  Rng rng(trial_seed(seed, trial));
  CheckReport rep;
  std::string note;
  switch (t) {
    case Theorem::interlacing: {
      const DenseTensor3 a = gaussian_tensor(m, n, p, rng);
      const IndexSubset rows = random_subset(Mode::rows, m, rng);
      const IndexSubset cols = random_subset(Mode::cols, n, rng);
      rep = check_interlacing(a, rows, cols, opts);
      break;
    }
    case Theorem::slice_append: {
      const DenseTensor3 a = gaussian_tensor(m, n, p, rng);
      const DenseTensor3 extra = gaussian_tensor(m, 1, p, rng);
      rep = check_slice_append(a, extra, opts);
      break;
    }
    case Theorem::mirsky: {
      const DenseTensor3 a = gaussian_tensor(m, n, p, rng);
      const DenseTensor3 g = gaussian_tensor(m, n, p, rng);
      const double s = kMirskyScales[trial % 3];
      rep = check_mirsky(a, s > 0.0 ? a + s * g : g, opts);
      std::ostringstream os;
      if (s > 0.0) {
        os << "B = A + " << s << " G";
      } else {
        os << "B independent";
      }
      note = os.str();
      break;
    }
    case Theorem::sum_product: {
      const DenseTensor3 a = gaussian_tensor(m, n, p, rng);
      const DenseTensor3 b = gaussian_tensor(m, n, p, rng);
      rep = check_sum_product_all(a, b, opts);
      break;
    }
    case Theorem::compression: {
      const DenseTensor3 a = gaussian_tensor(m, n, p, rng);
      const std::size_t k = rng.uniform(1, std::min(m, n));
      const DenseTensor3 u = random_orthogonal(m, k, p, rng.next_seed());
      const DenseTensor3 v = random_orthogonal(n, k, p, rng.next_seed());
      rep = check_compression(a, u, v, opts);
      break;
    }
    case Theorem::multiplicative: {
      const DenseTensor3 b = gaussian_tensor(m, n, p, rng);
      const DenseTensor3 u = gaussian_tensor(m, m, p, rng);
      const DenseTensor3 v = gaussian_tensor(n, n, p, rng);
      rep = check_multiplicative(b, u, v, opts);
      break;
    }
    case Theorem::norm_identities: {
      const DenseTensor3 a = gaussian_tensor(m, n, p, rng);
      const DenseTensor3 q = random_orthogonal(m, m, p, rng.next_seed());
      rep = check_norm_identities(a, q, opts);
      break;
    }
  }
  rep.instance.seed = seed;
  rep.instance.trial = trial;
  if (!note.empty()) rep.instance.note = note;
  return rep;
}

std::vector<CheckReport> run_trials(const TrialPlan& plan) {
  validate_dims(plan.theorem, plan.m, plan.n, plan.p);
  std::vector<CheckReport> reports(plan.trials);
  for_each_index(plan.trials, plan.exec, [&](std::size_t trial) {
    reports[trial] = run_trial(plan.theorem, plan.m, plan.n, plan.p, plan.seed, trial,
                               plan.options);
  });
  return reports;
}

}  // namespace t3
