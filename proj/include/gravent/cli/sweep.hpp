#pragma once

// Grid sweeps over SystemParams fields with deterministic fan-out.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "gravent/cli/record.hpp"
#include "gravent/core_model.hpp"

namespace gravent::cli {

enum class SweepKind { ContourLambda, TimeTrace, TauEntScan, Custom };

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int count = 2;
  bool log = false;
};

struct SweepSpec {
  SweepKind kind = SweepKind::Custom;
  std::vector<Axis> grid;
  /// Values for every SystemParams field not on an axis; see axis_names().
  std::map<std::string, double> fixed;
  Format output_format = Format::Csv;
  unsigned parallelism = 1;

  /// Throws InvalidParameter for unknown axis names, count < 2, non-positive
  /// bounds on a log axis, or parallelism 0.
  void validate() const;
};

/// Names accepted on a grid axis: lambda1, lambda2, eta, mu, chi, omega_khz
/// and tau.
const std::vector<std::string>& axis_names();

/// Parses "name:min:max:count[:log]" items separated by commas.
std::vector<Axis> parse_grid(const std::string& text);

/// Axis points, endpoints included exactly.
std::vector<double> axis_values(const Axis& axis);

/// Cartesian product in row-major order (the last axis varies fastest).
std::vector<std::vector<double>> grid_points(const std::vector<Axis>& grid);

/// SystemParams from `fixed` overridden by one grid point. The value for
/// "tau" is not a SystemParams field and is returned separately.
SystemParams params_at(const SweepSpec& spec, const std::vector<double>& point,
                       double* tau);

/// Calls f(i) for i in [0, n) on `jobs` threads and returns the results in
/// index order, so the output does not depend on the thread count. The first
/// exception thrown by any call is rethrown after all workers stop.
template <typename F>
auto parallel_map(std::size_t n, unsigned jobs, F f)
    -> std::vector<decltype(f(std::size_t{}))> {
  using Result = decltype(f(std::size_t{}));
  std::vector<Result> results(n);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = f(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        results[i] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> guard(failure_lock);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace gravent::cli
