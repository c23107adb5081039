#pragma once

// Readers for the bench CSV and SVG outputs, written independently of the emitters.

#include <cstdint>
#include <string>
#include <vector>

namespace qfid::oracle {

struct CsvRow {
  unsigned k = 0;
  std::size_t dim = 0;
  std::string method;
  std::uint64_t runs = 0;
  double mean_s = 0.0;
  double median_s = 0.0;
  double std_s = 0.0;
};

struct CsvTable {
  std::string header;
  std::vector<CsvRow> rows;
};

/// Throws std::runtime_error on a malformed line. "nan" parses to NaN.
CsvTable parse_bench_csv(const std::string& text);

struct SvgPoint {
  double x = 0.0;
  double y = 0.0;
};

struct SvgPlot {
  double decade_px = 0.0;
  std::vector<std::vector<SvgPoint>> polylines;
  std::vector<std::string> legend_labels;
  std::size_t legend_lines = 0;
};

SvgPlot parse_bench_svg(const std::string& text);

}  // namespace qfid::oracle
