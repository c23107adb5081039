#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "qfid/bench.hpp"
#include "qfid/errors.hpp"
#include "qfid/number_format.hpp"

namespace qfid {

namespace {

// Known methods sort by their enumeration order, custom targets after them.
std::size_t method_order(const std::string& name) {
  const std::optional<FidelityMethod> m = parse_method(name);
  return m ? method_rank(*m) : kAllMethods.size();
}

std::vector<BenchCell> sorted_cells(const BenchReport& report) {
  std::vector<BenchCell> cells = report.cells;
  std::stable_sort(cells.begin(), cells.end(), [](const BenchCell& a, const BenchCell& b) {
    if (a.k != b.k) return a.k < b.k;
    return method_order(a.method) < method_order(b.method);
  });
  return cells;
}

std::string csv_number(double x) { return std::isnan(x) ? "nan" : format_g17(x); }

std::string legend_label(const std::string& name) {
  const std::optional<FidelityMethod> m = parse_method(name);
  return m ? std::string(method_label(*m)) : name;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

// Plot geometry in SVG user units.
constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;  // room for the legend
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;

}  // namespace

std::string emit_csv(const BenchReport& report) {
  std::string out = "k,dim,method,runs,mean_s,median_s,std_s\n";
  for (const BenchCell& c : sorted_cells(report)) {
    out += std::to_string(c.k) + ',' + std::to_string(c.dim) + ',' + c.method + ',' +
           std::to_string(c.runs) + ',' + csv_number(c.mean_s) + ',' + csv_number(c.median_s) + ',' +
           csv_number(c.std_s) + '\n';
  }
  return out;
}

std::string emit_plot(const BenchReport& report) {
  std::map<std::string, std::vector<const BenchCell*>> series;
  // Methods in first-seen order, which is method order after sorting.
  std::vector<std::string> order;
  const std::vector<BenchCell> cells = sorted_cells(report);
  unsigned k_lo = ~0u;
  unsigned k_hi = 0;
  double t_lo = std::numeric_limits<double>::infinity();
  double t_hi = 0.0;
  for (const BenchCell& c : cells) {
    if (c.error) continue;
    if (!(c.mean_s > 0.0) || !std::isfinite(c.mean_s)) {
      throw InvalidArgument("emit_plot: non-positive mean time for " + c.method);
    }
    if (series.find(c.method) == series.end()) order.push_back(c.method);
    series[c.method].push_back(&c);
    k_lo = std::min(k_lo, c.k);
    k_hi = std::max(k_hi, c.k);
    t_lo = std::min(t_lo, c.mean_s);
    t_hi = std::max(t_hi, c.mean_s);
  }
  if (order.empty()) throw InvalidArgument("emit_plot: no timed cells");

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const int dec_lo = static_cast<int>(std::floor(std::log10(t_lo)));
  int dec_hi = static_cast<int>(std::ceil(std::log10(t_hi)));
  if (dec_hi == dec_lo) ++dec_hi;
  const double decade_px = plot_h / (dec_hi - dec_lo);
  const double bottom = kTop + plot_h;
  const auto x_of = [&](unsigned k) {
    if (k_hi == k_lo) return kLeft + 0.5 * plot_w;
    return kLeft + plot_w * (k - k_lo) / static_cast<double>(k_hi - k_lo);
  };
  const auto y_of = [&](double t) { return bottom - (std::log10(t) - dec_lo) * decade_px; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" data-decade-px=\""
      << format_g17(decade_px) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Decade gridlines with 10^d labels.
  for (int d = dec_lo; d <= dec_hi; ++d) {
    const double y = bottom - (d - dec_lo) * decade_px;
    svg << "<line class=\"grid\" x1=\"" << kLeft << "\" y1=\"" << format_g17(y) << "\" x2=\""
        << kLeft + plot_w << "\" y2=\"" << format_g17(y) << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << format_g17(y + 4)
        << "\" text-anchor=\"end\" font-size=\"12\">1e" << d << "</text>\n";
  }
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    svg << "<text x=\"" << format_g17(x_of(k)) << "\" y=\"" << bottom + 18
        << "\" text-anchor=\"middle\" font-size=\"12\">" << k << "</text>\n";
  }
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << kLeft + 0.5 * plot_w << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\" font-size=\"13\">qubits k</text>\n";
  svg << "<text transform=\"translate(18," << kTop + 0.5 * plot_h
      << ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">mean time [s] (log scale)</text>\n";

  for (std::size_t i = 0; i < order.size(); ++i) {
    const char* colour = kPalette[i % kPalette.size()];
    svg << "<polyline class=\"series\" data-method=\"" << xml_escape(order[i]) << "\" fill=\"none\" stroke=\""
        << colour << "\" stroke-width=\"2\" points=\"";
    const std::vector<const BenchCell*>& pts = series[order[i]];
    for (std::size_t j = 0; j < pts.size(); ++j) {
      svg << (j ? " " : "") << format_g17(x_of(pts[j]->k)) << ',' << format_g17(y_of(pts[j]->mean_s));
    }
    svg << "\"/>\n";
    const double ly = kTop + 10 + 22.0 * static_cast<double>(i);
    const double lx = kWidth - kRight + 20;
    svg << "<line class=\"legend\" x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 30
        << "\" y2=\"" << ly << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    svg << "<text class=\"legend\" x=\"" << lx + 38 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
        << xml_escape(legend_label(order[i])) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qfid
