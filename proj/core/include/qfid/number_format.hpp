#pragma once

#include <string>
#include <string_view>

#include "qfid/complex_matrix.hpp"

/// Locale-independent number text. Everything that leaves the library as
/// text goes through here so that output never depends on the C locale.
namespace qfid {

/// Up to 17 significant digits, shortest form that still round-trips.
std::string format_g17(double x);

/// Fixed notation with 17 digits after the point, e.g. "1.00000000000000000".
std::string format_fixed17(double x);

/// `a+bi` / `a-bi` with both parts in format_g17. A negative-zero imaginary
/// part is written with a minus sign so that the sign bit survives.
std::string format_complex(Complex z);

/// Whole-string parse; throws ParseError on trailing garbage or empty input.
double parse_double(std::string_view text);

/// Inverse of format_complex. Also accepts a bare real ("0.5").
Complex parse_complex(std::string_view text);

}  // namespace qfid
