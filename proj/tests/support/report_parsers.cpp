#include "report_parsers.hpp"

#include <cstdlib>
#include <limits>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace qfid::oracle {

namespace {

double to_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::runtime_error("bad number '" + s + "'");
  return v;
}

std::string unescape(std::string s) {
  const std::pair<const char*, const char*> table[] = {
      {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""}, {"&amp;", "&"}};
  for (const auto& [from, to] : table) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + 1)) {
      s.replace(pos, std::char_traits<char>::length(from), to);
    }
  }
  return s;
}

}  // namespace

CsvTable parse_bench_csv(const std::string& text) {
  std::istringstream in(text);
  CsvTable table;
  if (!std::getline(in, table.header)) return table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() != 7) throw std::runtime_error("expected 7 fields in '" + line + "'");
    table.rows.push_back(CsvRow{static_cast<unsigned>(std::stoul(f[0])), std::stoull(f[1]), f[2],
                                std::stoull(f[3]), to_double(f[4]), to_double(f[5]), to_double(f[6])});
  }
  return table;
}

SvgPlot parse_bench_svg(const std::string& text) {
  SvgPlot plot;
  std::smatch m;
  if (std::regex_search(text, m, std::regex(R"(data-decade-px="([^"]+)\")"))) {
    plot.decade_px = to_double(m[1]);
  }
  const std::regex poly(R"(<polyline[^>]*points="([^"]*)\")");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), poly); it != std::sregex_iterator(); ++it) {
    std::vector<SvgPoint> pts;
    std::istringstream ps((*it)[1].str());
    for (std::string pair; ps >> pair;) {
      const auto comma = pair.find(',');
      pts.push_back({to_double(pair.substr(0, comma)), to_double(pair.substr(comma + 1))});
    }
    plot.polylines.push_back(std::move(pts));
  }
  const std::regex label(R"(<text class="legend"[^>]*>([^<]*)</text>)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), label); it != std::sregex_iterator(); ++it) {
    plot.legend_labels.push_back(unescape((*it)[1].str()));
  }
  const std::regex legend_line(R"(<line class="legend")");
  plot.legend_lines = static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), legend_line), std::sregex_iterator()));
  return plot;
}

}  // namespace qfid::oracle
