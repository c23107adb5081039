#include "qfid/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qfid/errors.hpp"
#include "qfid/number_format.hpp"

namespace qfid {

namespace {

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  out << "dim " << n << '\n';
  std::string line;
  for (std::size_t r = 0; r < n; ++r) {
    line.clear();
    for (std::size_t c = 0; c < n; ++c) {
      if (c > 0) line += ' ';
      line += format_complex(m(r, c));
    }
    line += '\n';
    out << line;
  }
}

ComplexMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("missing 'dim n' header");
  std::istringstream header(line);
  std::string keyword;
  std::string count;
  std::string extra;
  header >> keyword >> count;
  if (keyword != "dim" || count.empty() || (header >> extra)) {
    throw ParseError("expected 'dim n' header, got '" + line + "'");
  }
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc{} || ptr != count.data() + count.size() || n == 0) {
    throw ParseError("dimension '" + count + "' is not a positive integer");
  }

  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!next_line(in, line)) {
      throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    }
    std::istringstream row(line);
    std::string token;
    std::size_t c = 0;
    while (row >> token) {
      if (c == n) throw ParseError("row " + std::to_string(r + 1) + " has more than " + std::to_string(n) + " entries");
      const Complex z = parse_complex(token);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw ParseError("non-finite entry '" + token + "' in row " + std::to_string(r + 1));
      }
      m(r, c++) = z;
    }
    if (c != n) {
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(c) +
                       " entries, expected " + std::to_string(n));
    }
  }
  while (next_line(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError("unexpected content after " + std::to_string(n) + " rows");
    }
  }
  return m;
}

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_matrix(out, m);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_matrix(in);
}

}  // namespace qfid
