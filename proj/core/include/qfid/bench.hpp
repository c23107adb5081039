#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfid/fidelity.hpp"
#include "qfid/states.hpp"

namespace qfid {

/// Sweep over qubit counts k (dim = 2^k) and fidelity methods.
struct BenchConfig {
  unsigned k_min = 1;
  unsigned k_max = 10;
  std::uint64_t runs_base = 1000;
  std::vector<FidelityMethod> methods{kAllMethods.begin(), kAllMethods.end()};
  std::uint64_t seed = 1;
  unsigned warmup_runs = 3;

  /// k = 1..13 with 10^4 base runs.
  static BenchConfig paper_scale();
  /// Throws InvalidArgument unless 1 <= k_min <= k_max <= kMaxQubits,
  /// runs_base >= 1 and methods is non-empty.
  void validate() const;
};

/// Above this the matrices no longer fit in memory on any desk machine.
inline constexpr unsigned kMaxQubits = 16;

/// ceil(runs_base / 2^(k-3)) in exact integer arithmetic; for k < 3 the
/// divisor is a fraction and the count grows.
std::uint64_t run_schedule(unsigned k, std::uint64_t runs_base);

struct BenchCell {
  unsigned k = 0;
  std::size_t dim = 0;
  std::string method;  // method tag, or the target name for custom targets
  std::uint64_t runs = 0;
  double mean_s = 0.0;
  double median_s = 0.0;
  double std_s = 0.0;  // sample standard deviation; 0 for a single run
  std::optional<std::string> error;  // set when a call threw; statistics are then NaN
};

struct BenchEnvironment {
  std::uint64_t seed = 0;
  std::string timestamp;  // UTC, ISO 8601
  unsigned workers = 1;
};

struct BenchReport {
  std::vector<BenchCell> cells;  // ordered by k, then by target order
  BenchEnvironment environment;

  bool has_errors() const;
};

/// Something to time on a pair. The return value is kept alive so the call
/// cannot be optimized away.
struct BenchTarget {
  std::string name;
  std::function<double(const DensityMatrix&, const DensityMatrix&)> call;
};

BenchTarget method_target(FidelityMethod method);

/// Times cfg.methods.
BenchReport bench_sweep(const BenchConfig& cfg);
/// Times arbitrary targets under cfg's schedule, sizes and seed; cfg.methods is ignored.
BenchReport bench_sweep(const BenchConfig& cfg, const std::vector<BenchTarget>& targets);

/// The seed of the pair consumed by run `run` at size k. Every target sees the same pairs.
std::uint64_t pair_seed(std::uint64_t seed, unsigned k, std::uint64_t run);

struct FastestEntry {
  unsigned k = 0;
  std::string method;
  double mean_s = 0.0;
};
/// Fastest error-free cell per k by mean time.
std::vector<FastestEntry> fastest_by_k(const BenchReport& report);

/// Header `k,dim,method,runs,mean_s,median_s,std_s`, one row per cell.
/// Rows are sorted by k, then by method order; errored cells show nan statistics.
std::string emit_csv(const BenchReport& report);

/// One polyline per method, mean seconds against k on a log10 axis. The root
/// element carries data-decade-px, the pixel height of one decade.
/// Throws InvalidArgument for an empty report or a non-positive timing.
std::string emit_plot(const BenchReport& report);

/// `key = value` lines, '#' starts a comment. Keys: k_min, k_max, runs_base,
/// methods (comma-separated tags or "all"), seed, warmup_runs. Keys not
/// present keep the values from `base`. Throws ParseError.
BenchConfig parse_bench_config(std::string_view text, BenchConfig base = {});
BenchConfig load_bench_config(const std::string& path, BenchConfig base = {});

}  // namespace qfid
