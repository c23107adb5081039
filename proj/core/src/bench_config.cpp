#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "qfid/bench.hpp"
#include "qfid/errors.hpp"

namespace qfid {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_unsigned(std::string_view key, std::string_view value, std::size_t line) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ParseError("config line " + std::to_string(line) + ": " + std::string(key) +
                     " expects a non-negative integer, got '" + std::string(value) + "'");
  }
  return out;
}

std::vector<FidelityMethod> parse_methods(std::string_view value, std::size_t line) {
  if (value == "all") return {kAllMethods.begin(), kAllMethods.end()};
  std::vector<FidelityMethod> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const std::string_view tag = trim(value.substr(0, comma));
    const std::optional<FidelityMethod> m = parse_method(tag);
    if (!m) {
      throw ParseError("config line " + std::to_string(line) + ": unknown method '" +
                       std::string(tag) + "'");
    }
    out.push_back(*m);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ParseError("config line " + std::to_string(line) + ": empty method list");
  return out;
}

}  // namespace

BenchConfig parse_bench_config(std::string_view text, BenchConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "k_min") {
      base.k_min = parse_unsigned<unsigned>(key, value, line_no);
    } else if (key == "k_max") {
      base.k_max = parse_unsigned<unsigned>(key, value, line_no);
    } else if (key == "runs_base") {
      base.runs_base = parse_unsigned<std::uint64_t>(key, value, line_no);
    } else if (key == "seed") {
      base.seed = parse_unsigned<std::uint64_t>(key, value, line_no);
    } else if (key == "warmup_runs") {
      base.warmup_runs = parse_unsigned<unsigned>(key, value, line_no);
    } else if (key == "methods") {
      base.methods = parse_methods(value, line_no);
    } else {
      throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" +
                       std::string(key) + "'");
    }
  }
  return base;
}

BenchConfig load_bench_config(const std::string& path, BenchConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("error reading config file " + path);
  return parse_bench_config(text.str(), std::move(base));
}

}  // namespace qfid
