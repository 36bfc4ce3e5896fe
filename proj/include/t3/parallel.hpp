#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace t3 {

// Selects the OpenMP kernel or the serial reference loop. Both write the same
// per-index outputs, so results are bitwise identical across policies.
enum class Exec { serial, parallel };

// Runs body(t) for t in [0, count). Exceptions thrown by any iteration are
// captured and the one from the lowest index is rethrown after the loop, so
// the reported failure does not depend on scheduling.
template <typename Body>
void for_each_index(std::size_t count, Exec exec, Body&& body) {
  if (exec == Exec::serial || count < 2) {
    for (std::size_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
  for (long long t = 0; t < n; ++t) {
    try {
      body(static_cast<std::size_t>(t));
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Number of Fourier slices that determine a real tensor's spectrum:
// slices 0 .. floor(p/2), the rest follow by conjugate symmetry.
constexpr std::size_t independent_slices(std::size_t p) { return p / 2 + 1; }

}  // namespace t3
