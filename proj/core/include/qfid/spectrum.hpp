#pragma once

#include <cstddef>
#include <vector>

#include "qfid/complex_matrix.hpp"

namespace qfid {

enum class SpectrumKind { general_complex, real, nonnegative_real };

/// Multiset of eigenvalues of an n x n matrix, with algebraic multiplicity.
struct Spectrum {
  std::vector<Complex> values;
  SpectrumKind kind = SpectrumKind::general_complex;

  std::size_t size() const { return values.size(); }
};

/// Relative tolerance below which imaginary parts and negative real parts
/// of a PSD-product spectrum are treated as rounding noise.
inline constexpr double kClampTolerance = 1e-8;

/// Cleans the spectrum of a product of PSD matrices.
///
/// Values with |Im| <= kClampTolerance * scale get a zero imaginary part, and
/// real parts in [-kClampTolerance * scale, 0) become 0. Anything larger is a
/// SpectrumRejected error: either the inputs were not PSD or the solver went
/// wrong. A zero scale is replaced by 1.
Spectrum clamp_spectrum(Spectrum s, double scale);

/// Largest |value|, 0 for an empty spectrum.
double max_abs(const Spectrum& s);

/// Sorts by (real, imag), the order used for pairwise spectrum comparison.
void sort_lexicographic(std::vector<Complex>& values);

/// Distance between two spectra of equal size, viewed as multisets.
///
/// Both lists are sorted by (real, imag) and compared pairwise. Lexicographic
/// order is fragile when two values share a real part to within noise, so a
/// greedy nearest-neighbour matching in both directions is also tried and
/// the smallest maximum deviation is reported. The result is symmetric in
/// its arguments.
double spectrum_deviation(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace qfid
