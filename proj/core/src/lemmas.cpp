#include "qfid/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qfid/errors.hpp"
#include "qfid/kernels.hpp"
#include "qfid/spectrum.hpp"

namespace qfid {

namespace {

void require_psd(const ComplexMatrix& a, const char* name) {
  if (a.hermiticity_defect() > tolerance::hermiticity(a)) {
    throw NotHermitian(std::string("check_mapped_cyclicity: ") + name + " is not Hermitian");
  }
  const std::vector<double> lambda = eigvalsh(symmetrize(a));
  if (!lambda.empty() && lambda.front() < -tolerance::psd(a)) {
    throw NotPsd(std::string("check_mapped_cyclicity: ") + name + " has eigenvalue " +
                 std::to_string(lambda.front()));
  }
}

std::vector<Complex> mapped_sqrt(const Spectrum& s) {
  std::vector<Complex> out;
  out.reserve(s.size());
  for (const Complex& z : s.values) out.emplace_back(std::sqrt(std::max(z.real(), 0.0)), 0.0);
  return out;
}

}  // namespace

CyclicityReport check_cyclicity(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  const ComplexMatrix ab = matmul(a, b);
  const ComplexMatrix ba = matmul(b, a);
  CyclicityReport r;
  r.spectrum_ab = eigvals_general(ab).values;
  r.spectrum_ba = eigvals_general(ba).values;
  r.max_deviation = spectrum_deviation(r.spectrum_ab, r.spectrum_ba);
  r.threshold = tol * std::max({1.0, ab.frobenius_norm(), ba.frobenius_norm()});
  r.holds = r.max_deviation <= r.threshold;
  return r;
}

CyclicityReport check_mapped_cyclicity(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("check_mapped_cyclicity: dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
  require_psd(a, "first argument");
  require_psd(b, "second argument");
  // Same clamp scale as the fidelity eigvals route: rounding in a product of
  // PSD factors is bounded by the factor norms.
  const double scale = a.frobenius_norm() * b.frobenius_norm();
  CyclicityReport r;
  r.spectrum_ab = mapped_sqrt(clamp_spectrum(eigvals_general(matmul(a, b)), scale));
  r.spectrum_ba = mapped_sqrt(clamp_spectrum(eigvals_general(matmul(b, a)), scale));
  r.max_deviation = spectrum_deviation(r.spectrum_ab, r.spectrum_ba);
  r.threshold = tol;
  r.holds = r.max_deviation <= r.threshold;
  return r;
}

double trace_eigensum_defect(const ComplexMatrix& a) {
  const Spectrum s = eigvals_general(a);
  const Complex sum = std::accumulate(s.values.begin(), s.values.end(), Complex(0.0));
  const Complex trace = a.trace();
  return std::abs(sum - trace) / (1.0 + std::abs(trace));
}

}  // namespace qfid
