#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "t3/perturbation.hpp"
#include "t3/random.hpp"
#include "t3/spectral.hpp"
#include "t3/tensor_io.hpp"
#include "t3/tprod.hpp"
#include "t3/tsvd.hpp"

namespace t3::cli {

namespace {

using json = nlohmann::ordered_json;

// Exit-code carrying error for argument problems detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kOracleThreshold = 1e-9;
constexpr std::size_t kOracleSizeGuard = 10'000'000;

double max_abs_deviation(const std::vector<ComplexMatrix>& x,
                         const std::vector<ComplexMatrix>& y) {
  double dev = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (std::size_t t = 0; t < x[k].size(); ++t) {
      dev = std::max(dev, std::abs(x[k].data()[t] - y[k].data()[t]));
    }
  }
  return dev;
}

double max_abs_deviation(const DenseTensor3& x, const DenseTensor3& y) {
  double dev = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    dev = std::max(dev, std::abs(x.values()[t] - y.values()[t]));
  }
  return dev;
}

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (t > 0) s += ' ';
    s += format_double(values[t]);
  }
  return s;
}

std::vector<double> row_of(const Matrix& m, std::size_t r) {
  return std::vector<double>(m.data().begin() + static_cast<std::ptrdiff_t>(r * m.cols()),
                             m.data().begin() + static_cast<std::ptrdiff_t>((r + 1) * m.cols()));
}

void write_spectrum(std::ostream& os, const SingularSpectrum& spec) {
  os << "# tensor singular values\n" << join(spec.values) << '\n';
  os << "# Fourier-slice singular values, one slice per line\n";
  for (std::size_t k = 0; k < spec.per_slice.rows(); ++k) {
    os << join(row_of(spec.per_slice, k)) << '\n';
  }
}

json spectrum_json(const SingularSpectrum& spec) {
  json per_slice = json::array();
  for (std::size_t k = 0; k < spec.per_slice.rows(); ++k) {
    per_slice.push_back(row_of(spec.per_slice, k));
  }
  return json{{"values", spec.values}, {"per_slice", per_slice}};
}

int cmd_tsvd(const std::string& input, const std::string& prefix, const RunConfig& cfg,
             std::ostream& out) {
  const DenseTensor3 a = read_tensor(std::filesystem::path(input));
  const TsvdFactors f = tsvd(a);
  const SingularSpectrum spec = singular_values(a);
  const DenseTensor3 rebuilt = tprod(tprod(f.u, f.s), transpose(f.v));
  const double norm_a = frobenius_norm(a);
  const double residual = frobenius_norm(rebuilt - a) / (norm_a > 0.0 ? norm_a : 1.0);

  write_tensor(std::filesystem::path(prefix + ".U.t3b"), f.u);
  write_tensor(std::filesystem::path(prefix + ".S.t3b"), f.s);
  write_tensor(std::filesystem::path(prefix + ".V.t3b"), f.v);
  {
    std::ofstream os(prefix + ".spectrum.txt");
    if (!os) throw FormatError(FormatError::Kind::io, "cannot write " + prefix + ".spectrum.txt");
    write_spectrum(os, spec);
  }

  if (cfg.output == OutputMode::records) {
    json rec = spectrum_json(spec);
    rec["residual"] = residual;
    rec["files"] = {prefix + ".U.t3b", prefix + ".S.t3b", prefix + ".V.t3b",
                    prefix + ".spectrum.txt"};
    out << rec.dump() << '\n';
  } else {
    write_spectrum(out, spec);
    out << "reconstruction residual " << format_double(residual) << '\n';
  }
  return kSuccess;
}

int cmd_singvals(const std::string& input, const RunConfig& cfg, std::ostream& out) {
  const SingularSpectrum spec = singular_values(read_tensor(std::filesystem::path(input)));
  if (cfg.output == OutputMode::records) {
    out << spectrum_json(spec).dump() << '\n';
  } else {
    out << join(spec.values) << '\n';
  }
  return kSuccess;
}

void emit_record(std::ostream& out, const CheckReport& rep, const CheckRecord& r,
                 OutputMode mode) {
  if (mode == OutputMode::records) {
    json rec{{"theorem", rep.theorem},
             {"seed", rep.instance.seed.value_or(0)},
             {"trial", rep.instance.trial},
             {"m", rep.instance.m},
             {"n", rep.instance.n},
             {"p", rep.instance.p},
             {"inequality", r.inequality},
             {"i", r.i},
             {"j", r.j},
             {"lhs", r.lhs},
             {"rhs", r.rhs},
             {"slack", r.slack},
             {"tolerance", r.tolerance},
             {"status", status_name(r.status)}};
    out << rec.dump() << '\n';
  } else {
    char line[256];
    std::snprintf(line, sizeof line, "%-15s trial %-4zu %-21s i=%-2zu j=%-2zu lhs=%-13.6g rhs=%-13.6g slack=%-13.6g %s",
                  rep.theorem.c_str(), rep.instance.trial, r.inequality.c_str(), r.i, r.j,
                  r.lhs, r.rhs, r.slack, std::string(status_name(r.status)).c_str());
    out << line << '\n';
  }
}

int cmd_check(const std::string& theorem, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  std::vector<Theorem> selected;
  if (theorem == "all") {
    selected.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  } else if (auto t = parse_theorem(theorem)) {
    selected.push_back(*t);
  } else {
    throw UsageError("unknown theorem id '" + theorem + "'");
  }
  const auto [m, n, p] = cfg.dims;
  for (Theorem t : selected) {
    try {
      validate_dims(t, m, n, p);
    } catch (const PreconditionError& e) {
      throw UsageError(std::string(theorem_name(t)) + ": " + e.what());
    }
  }

  CheckOptions opts;
  if (cfg.tolerance) {
    opts.rel_tol = *cfg.tolerance;
    opts.equality_tol = *cfg.tolerance;
  }
  std::size_t counts[3] = {0, 0, 0};
  for (Theorem t : selected) {
    TrialPlan plan{t, m, n, p, cfg.seed, cfg.trials, opts, Exec::parallel};
    for (const CheckReport& rep : run_trials(plan)) {
      for (const CheckRecord& r : rep.records) {
        emit_record(out, rep, r, cfg.output);
        ++counts[static_cast<int>(r.status)];
      }
    }
  }
  std::ostream& summary = cfg.output == OutputMode::records ? err : out;
  summary << counts[0] + counts[1] + counts[2] << " records: " << counts[0] << " pass, "
          << counts[1] << " fail, " << counts[2] << " vacuous\n";
  return counts[1] == 0 ? kSuccess : kCheckFailure;
}

int cmd_oracle_compare(const RunConfig& cfg, std::ostream& out) {
  const auto [m, n, p] = cfg.dims;
  if (m * n * p * p > kOracleSizeGuard || m * m * p * p > kOracleSizeGuard) {
    throw UsageError("oracle-compare: dims too large to materialize bcirc "
                     "(need m*n*p^2 <= 1e7)");
  }
  bool ok = true;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(trial_seed(cfg.seed, trial));
    const DenseTensor3 a = gaussian_tensor(m, n, p, rng);
    const DenseTensor3 b = gaussian_tensor(n, m, p, rng);
    const SpectralTensor3 fast = fft_mode3(a);
    const SpectralTensor3 naive = naive_dft_mode3(a);
    const std::vector<ComplexMatrix> blocks = block_diagonalize_oracle(a);
    const std::pair<const char*, double> rows[] = {
        {"fft-vs-naive-dft", max_abs_deviation(fast.slices, naive.slices)},
        {"fft-vs-block-diagonal", max_abs_deviation(fast.slices, blocks)},
        {"naive-dft-vs-block-diagonal", max_abs_deviation(naive.slices, blocks)},
        {"tprod-vs-bcirc", max_abs_deviation(tprod(a, b), tprod_bcirc(a, b))},
        {"ifft-roundtrip", max_abs_deviation(ifft_mode3(fast), a)},
    };
    for (const auto& [name, dev] : rows) {
      const bool pass = dev <= kOracleThreshold;
      ok = ok && pass;
      if (cfg.output == OutputMode::records) {
        out << json{{"comparison", name}, {"seed", cfg.seed}, {"trial", trial},
                    {"m", m}, {"n", n}, {"p", p}, {"deviation", dev},
                    {"threshold", kOracleThreshold}, {"status", pass ? "pass" : "fail"}}
                   .dump()
            << '\n';
      } else {
        out << "trial " << trial << ' ' << name << " max deviation " << format_double(dev)
            << (pass ? " pass" : " FAIL") << '\n';
      }
    }
  }
  return ok ? kSuccess : kCheckFailure;
}

int cmd_gen(const std::string& kind, const std::string& path, const RunConfig& cfg,
            std::ostream& out) {
  const auto [m, n, p] = cfg.dims;
  DenseTensor3 a;
  if (kind == "gaussian") {
    a = gaussian_tensor(m, n, p, cfg.seed);
  } else if (kind == "orthogonal") {
    if (n > m) throw UsageError("gen orthogonal: need N <= M");
    a = random_orthogonal(m, n, p, cfg.seed);
  } else if (kind == "f-diagonal") {
    a = f_diagonal_tensor(m, n, p, cfg.seed);
  } else {
    throw UsageError("unknown kind '" + kind + "'");
  }
  write_tensor(std::filesystem::path(path), a);
  if (cfg.output == OutputMode::text) {
    out << "wrote " << m << "x" << n << "x" << p << ' ' << kind << " tensor to " << path << '\n';
  }
  return kSuccess;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"T-product tensor algebra, T-SVD and singular value perturbation checks",
               "t3tool"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::size_t> dims;
  std::string format = "text";
  std::string input, prefix, theorem, kind, out_path;

  auto add_dims = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--dims", dims, "Tensor dimensions M N P")->expected(3);
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output mode")
        ->check(CLI::IsMember({"text", "records"}));
  };

  auto* tsvd_cmd = app.add_subcommand("tsvd", "Factor a tensor file as U * S * V^T");
  tsvd_cmd->add_option("input", input, "Tensor file")->required();
  tsvd_cmd->add_option("--out", prefix, "Output prefix for U, S, V and the spectrum")->required();
  add_format(tsvd_cmd);

  auto* sv_cmd = app.add_subcommand("singvals", "Print the tensor singular values");
  sv_cmd->add_option("input", input, "Tensor file")->required();
  add_format(sv_cmd);

  auto* check_cmd = app.add_subcommand("check", "Run seeded perturbation-bound checks");
  check_cmd->add_option("theorem", theorem,
                        "interlacing | slice-append | mirsky | sum-product | compression | "
                        "multiplicative | norm-identities | all")
      ->required();
  add_dims(check_cmd, true);
  check_cmd->add_option("--seed", cfg.seed, "Base seed");
  check_cmd->add_option("--trials", cfg.trials, "Number of seeded trials")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--tol", cfg.tolerance, "Relative tolerance override")
      ->check(CLI::PositiveNumber);
  add_format(check_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle-compare", "Cross-check transforms and products");
  add_dims(oracle_cmd, true);
  oracle_cmd->add_option("--seed", cfg.seed, "Base seed");
  oracle_cmd->add_option("--trials", cfg.trials, "Number of seeded trials")
      ->check(CLI::PositiveNumber);
  add_format(oracle_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random tensor");
  add_dims(gen_cmd, true);
  gen_cmd->add_option("--seed", cfg.seed, "Seed");
  gen_cmd->add_option("--kind", kind, "gaussian | orthogonal | f-diagonal")->required();
  gen_cmd->add_option("--out", out_path, "Destination file (.txt for text format)")->required();
  add_format(gen_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  if (!dims.empty()) {
    if (std::any_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; })) {
      err << "error: --dims must be positive\n";
      return kUsageError;
    }
    cfg.dims = {dims[0], dims[1], dims[2]};
  }
  cfg.output = format == "records" ? OutputMode::records : OutputMode::text;

  try {
    if (tsvd_cmd->parsed()) {
      cfg.command = "tsvd";
      return cmd_tsvd(input, prefix, cfg, out);
    }
    if (sv_cmd->parsed()) {
      cfg.command = "singvals";
      return cmd_singvals(input, cfg, out);
    }
    if (check_cmd->parsed()) {
      cfg.command = "check";
      return cmd_check(theorem, cfg, out, err);
    }
    if (oracle_cmd->parsed()) {
      cfg.command = "oracle-compare";
      return cmd_oracle_compare(cfg, out);
    }
    cfg.command = "gen";
    return cmd_gen(kind, out_path, cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace t3::cli
