#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "report_parsers.hpp"
#include "qfid/bench.hpp"
#include "qfid/errors.hpp"

namespace qfid {
namespace {

// ceil(base / 2^(k-3)) as an exact rational: base * 2^(3-k) rounded up.
std::uint64_t rational_ceiling(unsigned k, std::uint64_t base) {
  if (k <= 3) return base << (3 - k);
  const std::uint64_t den = std::uint64_t{1} << (k - 3);
  std::uint64_t q = 0;
  while (q * den < base) ++q;
  return q;
}

BenchConfig tiny(unsigned k_min, unsigned k_max, std::uint64_t base, std::vector<FidelityMethod> m) {
  BenchConfig cfg;
  cfg.k_min = k_min;
  cfg.k_max = k_max;
  cfg.runs_base = base;
  cfg.methods = std::move(m);
  cfg.warmup_runs = 1;
  return cfg;
}

TEST(RunSchedule, FigureCaptionValues) {
  EXPECT_EQ(run_schedule(3, 10000), 10000u);
  EXPECT_EQ(run_schedule(13, 10000), 10u);
  EXPECT_EQ(run_schedule(1, 10000), 40000u);
}

TEST(RunSchedule, MatchesRationalCeiling) {
  for (unsigned k = 1; k <= 20; ++k) {
    for (const std::uint64_t base : {1ull, 7ull, 1000ull, 10000ull, 12345ull}) {
      EXPECT_EQ(run_schedule(k, base), rational_ceiling(k, base)) << "k=" << k << " base=" << base;
    }
  }
}

TEST(RunSchedule, PaperScaleSpansFortyThousandToTen) {
  const BenchConfig paper = BenchConfig::paper_scale();
  const std::vector<std::uint64_t> expected{40000, 20000, 10000, 5000, 2500, 1250, 625, 313, 157, 79, 40, 20, 10};
  for (unsigned k = paper.k_min; k <= paper.k_max; ++k) {
    EXPECT_EQ(run_schedule(k, paper.runs_base), expected[k - 1]) << "k=" << k;
  }
}

TEST(RunSchedule, RejectsZero) {
  EXPECT_THROW(run_schedule(0, 10), InvalidArgument);
  EXPECT_THROW(run_schedule(3, 0), InvalidArgument);
}

TEST(BenchConfig, Validation) {
  EXPECT_NO_THROW(BenchConfig{}.validate());
  EXPECT_THROW(tiny(0, 2, 1, {FidelityMethod::eigvals}).validate(), InvalidArgument);
  EXPECT_THROW(tiny(3, 2, 1, {FidelityMethod::eigvals}).validate(), InvalidArgument);
  EXPECT_THROW(tiny(1, 2, 0, {FidelityMethod::eigvals}).validate(), InvalidArgument);
  EXPECT_THROW(tiny(1, 2, 1, {}).validate(), InvalidArgument);
  const BenchConfig paper = BenchConfig::paper_scale();
  EXPECT_EQ(paper.k_max, 13u);
  EXPECT_EQ(paper.runs_base, 10000u);
}

TEST(BenchSweep, OneCellScheduleArithmetic) {
  const BenchReport r = bench_sweep(tiny(1, 1, 8, {FidelityMethod::eigvals}));
  ASSERT_EQ(r.cells.size(), 1u);
  EXPECT_EQ(r.cells[0].runs, 32u);
  EXPECT_EQ(r.cells[0].dim, 2u);
  EXPECT_GT(r.cells[0].mean_s, 0.0);
  EXPECT_GT(r.cells[0].median_s, 0.0);
  EXPECT_GE(r.cells[0].std_s, 0.0);
  EXPECT_EQ(r.environment.workers, 1u);
  EXPECT_FALSE(r.environment.timestamp.empty());
}

TEST(BenchSweep, SameConfigConsumesSamePairs) {
  // A target that returns a fingerprint of its input records what it saw.
  std::vector<double> seen_a;
  std::vector<double> seen_b;
  const auto recorder = [](std::vector<double>& log) {
    return BenchTarget{"record", [&log](const DensityMatrix& r, const DensityMatrix& s) {
                         log.push_back(std::real(r.matrix()(0, 1)) + 3.0 * std::imag(s.matrix()(1, 0)));
                         return 0.0;
                       }};
  };
  const BenchConfig cfg = tiny(1, 3, 4, {FidelityMethod::eigvals});
  const BenchReport a = bench_sweep(cfg, {recorder(seen_a)});
  const BenchReport b = bench_sweep(cfg, {recorder(seen_b)});
  EXPECT_EQ(seen_a, seen_b);
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) EXPECT_EQ(a.cells[i].runs, b.cells[i].runs);
}

TEST(BenchSweep, NullTargetMeasuresAlmostNothing) {
  const BenchTarget null_target{"null", [](const DensityMatrix&, const DensityMatrix&) { return 0.0; }};
  const BenchReport r = bench_sweep(tiny(4, 6, 200, {FidelityMethod::eigvals}), {null_target});
  for (const BenchCell& c : r.cells) EXPECT_LT(c.mean_s, 1e-6) << "k=" << c.k;
}

TEST(BenchSweep, FailingTargetRecordsErrorAndSweepContinues) {
  const BenchTarget bad{"bad", [](const DensityMatrix&, const DensityMatrix&) -> double {
                          throw ConvergenceFailure("no");
                        }};
  const BenchReport r = bench_sweep(tiny(1, 2, 2, {FidelityMethod::eigvals}),
                                    {bad, method_target(FidelityMethod::eigvals)});
  ASSERT_EQ(r.cells.size(), 4u);
  EXPECT_TRUE(r.has_errors());
  EXPECT_TRUE(r.cells[0].error.has_value());
  EXPECT_TRUE(std::isnan(r.cells[0].mean_s));
  EXPECT_FALSE(r.cells[1].error.has_value());
  EXPECT_FALSE(r.cells[3].error.has_value());
}

BenchReport synthetic(std::vector<std::tuple<unsigned, std::string, double>> rows) {
  BenchReport r;
  for (const auto& [k, m, t] : rows) {
    r.cells.push_back(BenchCell{k, std::size_t{1} << k, m, 10, t, t, 0.1 * t, std::nullopt});
  }
  return r;
}

TEST(EmitCsv, EmptyReportIsHeaderOnly) {
  EXPECT_EQ(emit_csv(BenchReport{}), "k,dim,method,runs,mean_s,median_s,std_s\n");
}

TEST(EmitCsv, OneCellIsTwoLines) {
  const std::string csv = emit_csv(synthetic({{2, "eigvals", 1e-3}}));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(EmitCsv, SortedByKThenMethodOrder) {
  const std::string csv =
      emit_csv(synthetic({{3, "eigvals", 1}, {2, "eigvals", 1}, {2, "two_sqrtm", 1}, {3, "three_svd", 1}}));
  const oracle::CsvTable t = oracle::parse_bench_csv(csv);
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_EQ(t.rows[0].method, "two_sqrtm");
  EXPECT_EQ(t.rows[1].method, "eigvals");
  EXPECT_EQ(t.rows[2].method, "three_svd");
  EXPECT_EQ(t.rows[3].k, 3u);
}

TEST(EmitCsv, RoundTripIsNumericallyExact) {
  const BenchReport r = bench_sweep(tiny(1, 3, 4, {FidelityMethod::eigvals, FidelityMethod::two_sqrtm}));
  const oracle::CsvTable t = oracle::parse_bench_csv(emit_csv(r));
  EXPECT_EQ(t.header, "k,dim,method,runs,mean_s,median_s,std_s");
  ASSERT_EQ(t.rows.size(), r.cells.size());
  // Rows are sorted by (k, method rank); match each cell to its row by key.
  for (const BenchCell& c : r.cells) {
    const auto row = std::find_if(t.rows.begin(), t.rows.end(),
                                  [&](const oracle::CsvRow& x) { return x.k == c.k && x.method == c.method; });
    ASSERT_NE(row, t.rows.end());
    const std::size_t i = static_cast<std::size_t>(row - t.rows.begin());
    EXPECT_EQ(t.rows[i].k, c.k);
    EXPECT_EQ(t.rows[i].dim, c.dim);
    EXPECT_EQ(t.rows[i].runs, c.runs);
    EXPECT_EQ(t.rows[i].mean_s, c.mean_s);
    EXPECT_EQ(t.rows[i].median_s, c.median_s);
    EXPECT_EQ(t.rows[i].std_s, c.std_s);
  }
}

TEST(EmitPlot, OnePolylinePerMethod) {
  const std::string svg = emit_plot(synthetic({{1, "eigvals", 1e-5}, {2, "eigvals", 2e-5}, {3, "eigvals", 5e-5}}));
  const oracle::SvgPlot p = oracle::parse_bench_svg(svg);
  ASSERT_EQ(p.polylines.size(), 1u);
  EXPECT_EQ(p.polylines[0].size(), 3u);
}

TEST(EmitPlot, OneDecadeIsOneDecadeUnit) {
  const oracle::SvgPlot p = oracle::parse_bench_svg(emit_plot(synthetic({{1, "eigvals", 1e-3}, {2, "eigvals", 1e-2}})));
  ASSERT_EQ(p.polylines.size(), 1u);
  ASSERT_GT(p.decade_px, 0.0);
  EXPECT_NEAR(p.polylines[0][0].y - p.polylines[0][1].y, p.decade_px, 1e-9 * p.decade_px);
}

TEST(EmitPlot, LegendCarriesFigureLabels) {
  std::vector<std::tuple<unsigned, std::string, double>> rows;
  for (const FidelityMethod m : kAllMethods) {
    rows.emplace_back(1, std::string(method_tag(m)), 1e-4);
    rows.emplace_back(2, std::string(method_tag(m)), 3e-4);
  }
  const oracle::SvgPlot p = oracle::parse_bench_svg(emit_plot(synthetic(rows)));
  EXPECT_EQ(p.legend_labels,
            (std::vector<std::string>{"2x sqrtm", "3x svd", "sqrtmh + eigvalsh", "sqrtm_svd + svd", "eigvals"}));
  EXPECT_EQ(p.legend_lines, 5u);
  EXPECT_EQ(p.polylines.size(), 5u);
}

TEST(EmitPlot, RejectsEmptyAndNonPositive) {
  EXPECT_THROW(emit_plot(BenchReport{}), InvalidArgument);
  EXPECT_THROW(emit_plot(synthetic({{1, "eigvals", 0.0}})), InvalidArgument);
}

TEST(FastestByK, PicksMinimumMean) {
  const std::vector<FastestEntry> f =
      fastest_by_k(synthetic({{1, "eigvals", 2}, {1, "two_sqrtm", 1}, {2, "eigvals", 1}, {2, "three_svd", 3}}));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].method, "two_sqrtm");
  EXPECT_EQ(f[1].method, "eigvals");
}

TEST(BenchConfigFile, ParsesKeysAndComments) {
  const BenchConfig c = parse_bench_config(
      "# desk run\nk_min = 2\nk_max=5  # inline\nruns_base = 50\nmethods = eigvals, two_sqrtm\n"
      "seed = 9\nwarmup_runs = 0\n\n");
  EXPECT_EQ(c.k_min, 2u);
  EXPECT_EQ(c.k_max, 5u);
  EXPECT_EQ(c.runs_base, 50u);
  EXPECT_EQ(c.methods, (std::vector<FidelityMethod>{FidelityMethod::eigvals, FidelityMethod::two_sqrtm}));
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.warmup_runs, 0u);
  EXPECT_EQ(parse_bench_config("methods = all").methods.size(), 5u);
}

TEST(BenchConfigFile, RejectsBadLines) {
  for (const char* bad : {"k_min 2", "k_min = -1", "k_min = x", "colour = red", "methods = fast", "methods ="}) {
    EXPECT_THROW(parse_bench_config(bad), ParseError) << bad;
  }
  EXPECT_THROW(load_bench_config("/nonexistent/bench.conf"), IoError);
}

}  // namespace
}  // namespace qfid
