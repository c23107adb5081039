#include "qfid/number_format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

#include "qfid/errors.hpp"

namespace qfid {

namespace {

std::string to_text(double x, std::chars_format fmt, int precision) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, fmt, precision);
  if (ec != std::errc{}) throw Error("number formatting overflowed its buffer");
  return std::string(buf.data(), end);
}

}  // namespace

std::string format_g17(double x) {
  // Shortest round-trip form; never longer than 17 significant digits.
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw Error("number formatting overflowed its buffer");
  return std::string(buf.data(), end);
}

std::string format_fixed17(double x) { return to_text(x, std::chars_format::fixed, 17); }

std::string format_complex(Complex z) {
  std::string out = format_g17(z.real());
  out += std::signbit(z.imag()) ? '-' : '+';
  out += format_g17(std::abs(z.imag()));
  out += 'i';
  return out;
}

double parse_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return x;
}

Complex parse_complex(std::string_view text) {
  if (text.empty()) throw ParseError("empty complex entry");
  if (text.back() != 'i') return Complex(parse_double(text), 0.0);
  const std::string_view body = text.substr(0, text.size() - 1);
  // The real/imaginary split is the last sign that is neither leading nor an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t pos = body.size(); pos-- > 1;) {
    const char ch = body[pos];
    if ((ch == '+' || ch == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      split = pos;
      break;
    }
  }
  if (split == std::string_view::npos) {
    throw ParseError("complex entry '" + std::string(text) + "' is not of the form a+bi");
  }
  const double re = parse_double(body.substr(0, split));
  const std::string_view im_text = body.substr(split + 1);
  if (im_text.empty() || im_text.front() == '+' || im_text.front() == '-') {
    throw ParseError("complex entry '" + std::string(text) + "' has a malformed imaginary part");
  }
  const double im = parse_double(im_text);
  return Complex(re, body[split] == '-' ? -im : im);
}

}  // namespace qfid
