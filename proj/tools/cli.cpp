#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "qfid/bench.hpp"
#include "qfid/errors.hpp"
#include "qfid/fidelity.hpp"
#include "qfid/matrix_io.hpp"
#include "qfid/number_format.hpp"
#include "qfid/states.hpp"
#include "qfid/verify.hpp"

namespace qfid::cli {

namespace {

namespace fs = std::filesystem;

/// A usage problem found after CLI11 accepted the flags.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<FidelityMethod> parse_method_list(const std::string& text) {
  if (text == "all") return {kAllMethods.begin(), kAllMethods.end()};
  std::vector<FidelityMethod> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view tag = rest.substr(0, comma);
    const std::optional<FidelityMethod> m = parse_method(tag);
    if (!m) throw UsageError("unknown method '" + std::string(tag) + "'");
    out.push_back(*m);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

DensityMatrix load_state(const std::string& path) {
  try {
    return validate(load_matrix(path));
  } catch (const ValidationError& e) {
    throw ValidationError(e.cause(), path + ": " + e.detail());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw IoError("cannot write " + path);
}

// "out.txt" -> "out_a.txt"; the suffix goes before the extension.
fs::path suffixed(const fs::path& p, const char* suffix) {
  fs::path out = p.parent_path() / (p.stem().string() + suffix);
  out += p.extension();
  return out;
}

struct ComputeArgs {
  std::string rho;
  std::string sigma;
  std::string method = "all";
};

int compute(const ComputeArgs& a, std::ostream& out) {
  const std::vector<FidelityMethod> methods = parse_method_list(a.method);
  const DensityMatrix rho = load_state(a.rho);
  const DensityMatrix sigma = load_state(a.sigma);
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("states have dimensions " + std::to_string(rho.dim()) + " and " +
                            std::to_string(sigma.dim()));
  }
  double lo = 1.0;
  double hi = 0.0;
  for (const FidelityMethod m : methods) {
    const double v = fidelity(rho, sigma, m).value;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    out << method_tag(m) << ' ' << format_fixed17(v) << '\n';
  }
  if (methods.size() > 1) out << "spread " << format_g17(hi - lo) << '\n';
  return kOk;
}

int verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.trials == 0) throw UsageError("--trials must be at least 1");
  const VerifyReport report = run_verify(cfg);
  for (const SuiteResult& s : report.suites) {
    out << (s.passed ? "PASS " : "FAIL ") << s.name << " cases=" << s.cases
        << " max_deviation=" << format_g17(s.max_deviation) << " tolerance=" << format_g17(s.tolerance)
        << '\n';
  }
  if (const auto failing = report.first_failing_suite()) {
    const auto it = std::find_if(report.suites.begin(), report.suites.end(),
                                 [&](const SuiteResult& s) { return s.name == *failing; });
    err << "verify: suite " << *failing << " failed (" << it->first_failure << ")\n";
    return kCheckFailed;
  }
  return kOk;
}

struct GenArgs {
  std::size_t dim = 2;
  std::optional<std::size_t> rank;
  std::string family = "mixed-full-rank";
  std::uint64_t seed = 1;
  std::string out;
};

int gen(const GenArgs& a, std::ostream& out) {
  const std::optional<FamilyTag> tag = parse_family(a.family);
  if (!tag) throw UsageError("unknown family '" + a.family + "'");
  if (a.dim == 0) throw UsageError("--dim must be at least 1");
  if (a.rank && *tag != FamilyTag::rank_deficient) {
    throw UsageError("--rank applies only to the rank-deficient family");
  }
  if (a.rank && (*a.rank < 1 || *a.rank > a.dim)) {
    throw UsageError("--rank " + std::to_string(*a.rank) + " is outside [1, " + std::to_string(a.dim) + "]");
  }
  const StateFamily family{*tag, a.rank};
  const fs::path path(a.out);
  if (is_pair_family(*tag)) {
    const auto [rho, sigma] = generate_pair(family, a.dim, a.seed);
    const fs::path pa = suffixed(path, "_a");
    const fs::path pb = suffixed(path, "_b");
    save_matrix(pa, rho.matrix());
    save_matrix(pb, sigma.matrix());
    out << pa.string() << '\n' << pb.string() << '\n';
  } else {
    save_matrix(path, generate_state(family, a.dim, a.seed).matrix());
    out << path.string() << '\n';
  }
  return kOk;
}

struct BenchArgs {
  std::optional<std::string> config;
  bool full_paper_scale = false;
  std::optional<unsigned> k_min;
  std::optional<unsigned> k_max;
  std::optional<std::uint64_t> runs_base;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> warmup;
  std::optional<std::string> method;
  std::string csv = "bench.csv";
  std::string svg = "bench.svg";
};

// Precedence, lowest first: defaults, --full-paper-scale, --config file, explicit flags.
BenchConfig bench_config(const BenchArgs& a) {
  BenchConfig cfg = a.full_paper_scale ? BenchConfig::paper_scale() : BenchConfig{};
  if (a.config) cfg = load_bench_config(*a.config, cfg);
  if (a.k_min) cfg.k_min = *a.k_min;
  if (a.k_max) cfg.k_max = *a.k_max;
  if (a.runs_base) cfg.runs_base = *a.runs_base;
  if (a.seed) cfg.seed = *a.seed;
  if (a.warmup) cfg.warmup_runs = *a.warmup;
  if (a.method) cfg.methods = parse_method_list(*a.method);
  cfg.validate();
  return cfg;
}

int bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const BenchConfig cfg = bench_config(a);
  const BenchReport report = bench_sweep(cfg);
  write_text(a.csv, emit_csv(report));
  bool plotted = false;
  try {
    write_text(a.svg, emit_plot(report));
    plotted = true;
  } catch (const InvalidArgument& e) {
    err << "bench: no plot written: " << e.what() << '\n';
  }
  out << "k fastest mean_s\n";
  for (const FastestEntry& f : fastest_by_k(report)) {
    out << f.k << ' ' << f.method << ' ' << format_g17(f.mean_s) << '\n';
  }
  out << "csv " << a.csv << '\n';
  if (plotted) out << "svg " << a.svg << '\n';
  if (report.has_errors()) {
    for (const BenchCell& c : report.cells) {
      if (c.error) err << "bench: k=" << c.k << ' ' << c.method << " failed: " << *c.error << '\n';
    }
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum state fidelity: compute, verify, generate, benchmark", "qfid"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute_cmd = app.add_subcommand("compute", "Fidelity of two density-matrix files");
  compute_cmd->add_option("rho", compute_args.rho, "First state file")->required();
  compute_cmd->add_option("sigma", compute_args.sigma, "Second state file")->required();
  compute_cmd->add_option("--method", compute_args.method, "Method tag, comma list, or 'all'")
      ->capture_default_str();

  VerifyConfig verify_cfg;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the spectral identity and fidelity property suites");
  verify_cmd->add_option("--dims", verify_cfg.dims, "Dimensions, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  verify_cmd->add_option("--trials", verify_cfg.trials, "Cases per suite and dimension")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_cfg.seed, "Master seed")->capture_default_str();

  GenArgs gen_args;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write random density matrices");
  gen_cmd->add_option("--dim", gen_args.dim, "Matrix dimension")->capture_default_str();
  gen_cmd->add_option("--rank", gen_args.rank, "Rank for the rank-deficient family");
  gen_cmd->add_option("--family", gen_args.family,
                      "mixed-full-rank, pure, commuting-pair, rank-deficient or identical-pair")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen_args.seed, "Seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_args.out, "Output path; pair families add _a and _b")->required();

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Timed sweep over qubit counts and methods");
  bench_cmd->add_option("--config", bench_args.config, "key = value config file");
  bench_cmd->add_flag("--full-paper-scale", bench_args.full_paper_scale, "k = 1..13, 10^4 base runs");
  bench_cmd->add_option("--k-min", bench_args.k_min, "Smallest qubit count");
  bench_cmd->add_option("--k-max", bench_args.k_max, "Largest qubit count");
  bench_cmd->add_option("--runs-base", bench_args.runs_base, "Runs at k = 3");
  bench_cmd->add_option("--seed", bench_args.seed, "Seed");
  bench_cmd->add_option("--warmup", bench_args.warmup, "Discarded calls per cell");
  bench_cmd->add_option("--method", bench_args.method, "Method tags, comma list, or 'all'");
  bench_cmd->add_option("--csv", bench_args.csv, "CSV output path")->capture_default_str();
  bench_cmd->add_option("--svg", bench_args.svg, "SVG output path")->capture_default_str();

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();  // program name
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute_cmd) return compute(compute_args, out);
    if (*verify_cmd) return verify(verify_cfg, out, err);
    if (*gen_cmd) return gen(gen_args, out);
    if (*bench_cmd) return bench(bench_args, out, err);
  } catch (const ValidationError& e) {
    err << "error: invalid density matrix: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DimensionMismatch& e) {
    err << "error: dimension mismatch: " << e.what() << '\n';
    return kDimensionMismatch;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace qfid::cli
