#pragma once

#include <filesystem>
#include <iosfwd>

#include "qfid/complex_matrix.hpp"

/// Text matrix files.
///
///     dim 2
///     0.75+0i 0+0i
///     0+0i 0.25+0i
///
/// Line 1 is `dim n`; then n lines of n whitespace-separated `a+bi` entries
/// with up to 17 significant digits. write followed by read reproduces every
/// bit, including signed zeros.
namespace qfid {

void write_matrix(std::ostream& out, const ComplexMatrix& m);

/// Throws ParseError on a malformed header, wrong entry count, bad entries
/// or non-finite values.
ComplexMatrix read_matrix(std::istream& in);

/// File wrappers; failures to open, read or write throw IoError.
void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m);
ComplexMatrix load_matrix(const std::filesystem::path& path);

}  // namespace qfid
