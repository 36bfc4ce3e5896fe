// Serial reference loop vs OpenMP kernels on the slice-parallel operations.
#include <benchmark/benchmark.h>

#include "t3/random.hpp"
#include "t3/tprod.hpp"
#include "t3/tsvd.hpp"

namespace {

using t3::Exec;

Exec exec_of(const benchmark::State& state) {
  return state.range(1) ? Exec::parallel : Exec::serial;
}

void BM_Tprod(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  t3::Rng rng(1);
  const t3::DenseTensor3 a = t3::gaussian_tensor(n, n, 32, rng);
  const t3::DenseTensor3 b = t3::gaussian_tensor(n, n, 32, rng);
  for (auto _ : state) benchmark::DoNotOptimize(t3::tprod(a, b, exec_of(state)));
}

void BM_Tsvd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const t3::DenseTensor3 a = t3::gaussian_tensor(n, n, 32, 2);
  for (auto _ : state) benchmark::DoNotOptimize(t3::tsvd(a, exec_of(state)));
}

void BM_SingularValues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const t3::DenseTensor3 a = t3::gaussian_tensor(n, n, 32, 3);
  for (auto _ : state) benchmark::DoNotOptimize(t3::singular_values(a, exec_of(state)));
}

void BM_Inverse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const t3::DenseTensor3 a = t3::gaussian_tensor(n, n, 32, 4);
  for (auto _ : state) benchmark::DoNotOptimize(t3::inverse(a, exec_of(state)));
}

// Second argument: 0 = serial, 1 = parallel.
BENCHMARK(BM_Tprod)->ArgsProduct({{16, 64}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tsvd)->ArgsProduct({{16, 48}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingularValues)->ArgsProduct({{16, 48}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Inverse)->ArgsProduct({{16, 48}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
