#include <gtest/gtest.h>

#include "qfid/errors.hpp"
#include "qfid/spectrum.hpp"

namespace qfid {
namespace {

Spectrum make(std::vector<Complex> v) { return Spectrum{std::move(v), SpectrumKind::general_complex}; }

TEST(ClampSpectrum, ZeroesImaginaryDust) {
  const Spectrum s = clamp_spectrum(make({Complex(0, 1e-17), 0.5}), 0.5);
  EXPECT_EQ(s.values, (std::vector<Complex>{0.0, 0.5}));
  EXPECT_EQ(s.kind, SpectrumKind::nonnegative_real);
}

TEST(ClampSpectrum, ZeroesNegativeDust) {
  const Spectrum s = clamp_spectrum(make({-1e-20, 0.3}), 0.3);
  EXPECT_EQ(s.values, (std::vector<Complex>{0.0, 0.3}));
}

TEST(ClampSpectrum, RejectsMateriallyNegativeValue) {
  EXPECT_THROW(clamp_spectrum(make({-0.01, 0.3}), 0.3), SpectrumRejected);
}

TEST(ClampSpectrum, RejectsMateriallyComplexValue) {
  EXPECT_THROW(clamp_spectrum(make({Complex(0.2, 1e-3), 0.3}), 0.3), SpectrumRejected);
}

TEST(ClampSpectrum, ThresholdIsRelativeToScale) {
  EXPECT_NO_THROW(clamp_spectrum(make({-0.9e-8, 1.0}), 1.0));
  EXPECT_THROW(clamp_spectrum(make({-1.1e-8, 1.0}), 1.0), SpectrumRejected);
  EXPECT_NO_THROW(clamp_spectrum(make({-0.9e-6, 100.0}), 100.0));
}

TEST(ClampSpectrum, ZeroScaleMeansUnitScale) {
  EXPECT_NO_THROW(clamp_spectrum(make({-1e-9, 0.0}), 0.0));
  EXPECT_THROW(clamp_spectrum(make({-1e-7, 0.0}), 0.0), SpectrumRejected);
}

TEST(SpectrumDeviation, SymmetricAndOrderFree) {
  const std::vector<Complex> a{Complex(1, 2), 3.0, Complex(-1, 0.5)};
  const std::vector<Complex> b{3.0 + 1e-12, Complex(-1, 0.5), Complex(1, 2)};
  EXPECT_EQ(spectrum_deviation(a, b), spectrum_deviation(b, a));
  EXPECT_NEAR(spectrum_deviation(a, b), 1e-12, 1e-15);
}

TEST(SpectrumDeviation, NearTiesInRealPartDoNotCrossMatch) {
  // Lexicographic order would pair 1+1i with 1-1i here.
  const std::vector<Complex> a{Complex(1.0, 1.0), Complex(1.0 + 1e-13, -1.0)};
  const std::vector<Complex> b{Complex(1.0 + 2e-13, 1.0), Complex(1.0, -1.0)};
  EXPECT_LE(spectrum_deviation(a, b), 1e-12);
}

TEST(SortLexicographic, OrdersByRealThenImaginary) {
  std::vector<Complex> v{Complex(1, 1), Complex(0, 5), Complex(1, -1)};
  sort_lexicographic(v);
  EXPECT_EQ(v, (std::vector<Complex>{Complex(0, 5), Complex(1, -1), Complex(1, 1)}));
}

TEST(MaxAbs, EmptyIsZero) { EXPECT_EQ(max_abs(Spectrum{}), 0.0); }

}  // namespace
}  // namespace qfid
