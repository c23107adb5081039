#include "qfid/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qfid/errors.hpp"

namespace qfid {

Spectrum clamp_spectrum(Spectrum s, double scale) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw SpectrumRejected("clamp scale must be a finite nonnegative number");
  }
  if (scale == 0.0) scale = 1.0;
  const double limit = kClampTolerance * scale;

  for (std::size_t i = 0; i < s.values.size(); ++i) {
    Complex& v = s.values[i];
    if (std::abs(v.imag()) > limit || v.real() < -limit || !std::isfinite(v.real())) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "eigenvalue " << i << " = (" << v.real() << ", " << v.imag()
          << ") is not a nonnegative real within " << limit;
      throw SpectrumRejected(msg.str());
    }
    v = Complex(std::max(v.real(), 0.0), 0.0);
  }
  s.kind = SpectrumKind::nonnegative_real;
  return s;
}

double max_abs(const Spectrum& s) {
  double m = 0.0;
  for (const auto& v : s.values) m = std::max(m, std::abs(v));
  return m;
}

void sort_lexicographic(std::vector<Complex>& values) {
  std::sort(values.begin(), values.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
}

namespace {

// Each value of `from` takes the closest unused value of `to`.
double greedy_match(const std::vector<Complex>& from, const std::vector<Complex>& to) {
  std::vector<bool> used(to.size(), false);
  double worst = 0.0;
  for (const auto& x : from) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - to[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double spectrum_deviation(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("spectra have different sizes");
  }
  if (a.empty()) return 0.0;
  sort_lexicographic(a);
  sort_lexicographic(b);
  double sorted = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sorted = std::max(sorted, std::abs(a[i] - b[i]));
  const double greedy = std::min(greedy_match(a, b), greedy_match(b, a));
  return std::min(sorted, greedy);
}

}  // namespace qfid
