#include "qfid/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <numeric>

#include "qfid/errors.hpp"
#include "qfid/rng.hpp"

namespace qfid {

namespace {

// Stream tags keep warmup pairs disjoint from timed pairs.
constexpr std::uint64_t kTimedStream = 0;
constexpr std::uint64_t kWarmupStream = 1;

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream, unsigned k, std::uint64_t run) {
  return derive_seed(derive_seed(seed, (stream << 8) | k), run);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

struct Samples {
  std::vector<double> seconds;
  std::optional<std::string> error;
};

BenchCell summarize(unsigned k, std::size_t dim, const std::string& name, std::uint64_t runs,
                    Samples s) {
  BenchCell cell{k, dim, name, runs, 0.0, 0.0, 0.0, std::move(s.error)};
  if (cell.error || s.seconds.empty()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    cell.mean_s = cell.median_s = cell.std_s = nan;
    return cell;
  }
  std::vector<double>& v = s.seconds;
  const auto n = static_cast<double>(v.size());
  cell.mean_s = std::accumulate(v.begin(), v.end(), 0.0) / n;
  if (v.size() > 1) {
    double ss = 0.0;
    for (const double x : v) ss += (x - cell.mean_s) * (x - cell.mean_s);
    cell.std_s = std::sqrt(ss / (n - 1.0));
  }
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  cell.median_s = v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
  return cell;
}

}  // namespace

BenchConfig BenchConfig::paper_scale() {
  BenchConfig cfg;
  cfg.k_min = 1;
  cfg.k_max = 13;
  cfg.runs_base = 10000;
  return cfg;
}

void BenchConfig::validate() const {
  if (k_min < 1 || k_min > k_max) {
    throw InvalidArgument("bench: need 1 <= k_min <= k_max, got k_min=" + std::to_string(k_min) +
                          ", k_max=" + std::to_string(k_max));
  }
  if (k_max > kMaxQubits) {
    throw InvalidArgument("bench: k_max " + std::to_string(k_max) + " exceeds " +
                          std::to_string(kMaxQubits));
  }
  if (runs_base < 1) throw InvalidArgument("bench: runs_base must be at least 1");
  if (methods.empty()) throw InvalidArgument("bench: no methods selected");
}

std::uint64_t run_schedule(unsigned k, std::uint64_t runs_base) {
  if (k < 1 || runs_base < 1) throw InvalidArgument("run_schedule: need k >= 1 and runs_base >= 1");
  if (k >= 3) {
    const unsigned shift = k - 3;
    if (shift >= 64) return 1;
    const std::uint64_t divisor = std::uint64_t{1} << shift;
    return runs_base / divisor + (runs_base % divisor != 0 ? 1 : 0);
  }
  const unsigned shift = 3 - k;  // 2^(k-3) = 1 / 2^shift
  if (runs_base > (std::numeric_limits<std::uint64_t>::max() >> shift)) {
    throw InvalidArgument("run_schedule: run count overflows");
  }
  return runs_base << shift;
}

std::uint64_t pair_seed(std::uint64_t seed, unsigned k, std::uint64_t run) {
  return stream_seed(seed, kTimedStream, k, run);
}

bool BenchReport::has_errors() const {
  return std::any_of(cells.begin(), cells.end(), [](const BenchCell& c) { return c.error.has_value(); });
}

BenchTarget method_target(FidelityMethod method) {
  return BenchTarget{std::string(method_tag(method)),
                     [method](const DensityMatrix& rho, const DensityMatrix& sigma) {
                       return fidelity(rho, sigma, method).value;
                     }};
}

BenchReport bench_sweep(const BenchConfig& cfg) {
  std::vector<BenchTarget> targets;
  targets.reserve(cfg.methods.size());
  for (const FidelityMethod m : cfg.methods) targets.push_back(method_target(m));
  return bench_sweep(cfg, targets);
}

BenchReport bench_sweep(const BenchConfig& cfg, const std::vector<BenchTarget>& targets) {
  BenchConfig checked = cfg;
  checked.methods = {FidelityMethod::eigvals};  // targets stand in for methods here
  checked.validate();
  if (targets.empty()) throw InvalidArgument("bench: no targets");

  using Clock = std::chrono::steady_clock;
  static_assert(Clock::is_steady);
  const StateFamily family{FamilyTag::mixed_full_rank, std::nullopt};
  volatile double sink = 0.0;

  BenchReport report;
  report.environment = BenchEnvironment{cfg.seed, utc_timestamp(), 1};
  for (unsigned k = cfg.k_min; k <= cfg.k_max; ++k) {
    const std::size_t dim = std::size_t{1} << k;
    const std::uint64_t runs = run_schedule(k, cfg.runs_base);
    std::vector<Samples> samples(targets.size());

    for (std::size_t t = 0; t < targets.size(); ++t) {
      for (unsigned w = 0; w < cfg.warmup_runs && !samples[t].error; ++w) {
        const auto [rho, sigma] = generate_pair(family, dim, stream_seed(cfg.seed, kWarmupStream, k, w));
        try {
          sink = sink + targets[t].call(rho, sigma);
        } catch (const std::exception& e) {
          samples[t].error = e.what();
        }
      }
      samples[t].seconds.reserve(runs);
    }

    for (std::uint64_t run = 0; run < runs; ++run) {
      // Generation stays outside the timed region.
      const auto [rho, sigma] = generate_pair(family, dim, pair_seed(cfg.seed, k, run));
      for (std::size_t t = 0; t < targets.size(); ++t) {
        if (samples[t].error) continue;
        try {
          const Clock::time_point start = Clock::now();
          const double value = targets[t].call(rho, sigma);
          const Clock::time_point stop = Clock::now();
          sink = sink + value;
          samples[t].seconds.push_back(std::chrono::duration<double>(stop - start).count());
        } catch (const std::exception& e) {
          samples[t].error = "run " + std::to_string(run) + ": " + e.what();
        }
      }
    }

    for (std::size_t t = 0; t < targets.size(); ++t) {
      report.cells.push_back(summarize(k, dim, targets[t].name, runs, std::move(samples[t])));
    }
  }
  return report;
}

std::vector<FastestEntry> fastest_by_k(const BenchReport& report) {
  std::vector<FastestEntry> out;
  for (const BenchCell& c : report.cells) {
    if (c.error) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const FastestEntry& e) { return e.k == c.k; });
    if (it == out.end()) {
      out.push_back(FastestEntry{c.k, c.method, c.mean_s});
    } else if (c.mean_s < it->mean_s) {
      *it = FastestEntry{c.k, c.method, c.mean_s};
    }
  }
  std::sort(out.begin(), out.end(), [](const FastestEntry& a, const FastestEntry& b) { return a.k < b.k; });
  return out;
}

}  // namespace qfid
