#include "qfid/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qfid/errors.hpp"
#include "qfid/kernels.hpp"
#include "qfid/number_format.hpp"

namespace qfid {

namespace {

struct MethodInfo {
  FidelityMethod method;
  std::string_view tag;
  std::string_view label;
};

constexpr std::array<MethodInfo, 5> kMethodInfo = {{
    {FidelityMethod::two_sqrtm, "two_sqrtm", "2x sqrtm"},
    {FidelityMethod::three_svd, "three_svd", "3x svd"},
    {FidelityMethod::sqrtmh_eigvalsh, "sqrtmh_eigvalsh", "sqrtmh + eigvalsh"},
    {FidelityMethod::sqrtm_svd_svd, "sqrtm_svd_svd", "sqrtm_svd + svd"},
    {FidelityMethod::eigvals, "eigvals", "eigvals"},
}};

const MethodInfo& info(FidelityMethod m) { return kMethodInfo[method_rank(m)]; }

void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("fidelity: states have dimensions " + std::to_string(rho.dim()) +
                            " and " + std::to_string(sigma.dim()));
  }
}

FidelityValue finish(double trace, FidelityMethod method) {
  const double raw = trace * trace;
  if (!(raw >= -kFidelitySlack && raw <= 1.0 + kFidelitySlack)) {
    throw FidelityOutOfRange(std::string(method_tag(method)) + " produced " + format_g17(raw));
  }
  return FidelityValue{std::clamp(raw, 0.0, 1.0), raw, method};
}

// sum_i sqrt(x_i) over a nonnegative spectrum, with dust mapped to 0.
template <typename Range>
double sum_of_roots(const Range& values, double scale) {
  const double floor = tolerance::dust_floor(scale);
  double total = 0.0;
  for (const double x : values) {
    if (x > floor) total += std::sqrt(x);
  }
  return total;
}

// sqrt(rho) sigma sqrt(rho), forced Hermitian.
ComplexMatrix sandwich(const ComplexMatrix& root_rho, const DensityMatrix& sigma) {
  return symmetrize(matmul(matmul(root_rho, sigma.matrix()), root_rho));
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (const double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::size_t method_rank(FidelityMethod m) { return static_cast<std::size_t>(m); }

std::string_view method_tag(FidelityMethod m) { return info(m).tag; }

std::string_view method_label(FidelityMethod m) { return info(m).label; }

std::optional<FidelityMethod> parse_method(std::string_view tag) {
  for (const MethodInfo& i : kMethodInfo) {
    if (i.tag == tag) return i.method;
  }
  return std::nullopt;
}

FidelityValue fidelity_two_sqrtm(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const ComplexMatrix root_rho = sqrtm_psd(rho.matrix(), SqrtmRoute::hermitian_eig);
  const ComplexMatrix inner = sqrtm_psd(sandwich(root_rho, sigma), SqrtmRoute::hermitian_eig);
  return finish(inner.trace().real(), FidelityMethod::two_sqrtm);
}

FidelityValue fidelity_three_svd(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const ComplexMatrix root_rho = sqrtm_psd(rho.matrix(), SqrtmRoute::svd);
  const ComplexMatrix root_sigma = sqrtm_psd(sigma.matrix(), SqrtmRoute::svd);
  return finish(trace_norm(matmul(root_rho, root_sigma)), FidelityMethod::three_svd);
}

FidelityValue fidelity_sqrtmh_eigvalsh(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const ComplexMatrix root_rho = sqrtm_psd(rho.matrix(), SqrtmRoute::hermitian_eig);
  const std::vector<double> lambda = eigvalsh(sandwich(root_rho, sigma));
  return finish(sum_of_roots(lambda, max_of(lambda)), FidelityMethod::sqrtmh_eigvalsh);
}

FidelityValue fidelity_sqrtm_svd_svd(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const ComplexMatrix root_rho = sqrtm_psd(rho.matrix(), SqrtmRoute::svd);
  const std::vector<double> s = singular_values(sandwich(root_rho, sigma));
  return finish(sum_of_roots(s, s.front()), FidelityMethod::sqrtm_svd_svd);
}

Spectrum product_spectrum(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  // Rounding in the product and the solver scales with ||rho|| ||sigma||, not
  // with the spectral radius of the product, which can be far smaller.
  const double scale = rho.matrix().frobenius_norm() * sigma.matrix().frobenius_norm();
  return clamp_spectrum(eigvals_general(matmul(rho.matrix(), sigma.matrix())), scale);
}

FidelityValue fidelity_eigvals(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const Spectrum spectrum = product_spectrum(rho, sigma);
  const double scale = rho.matrix().frobenius_norm() * sigma.matrix().frobenius_norm();
  const double floor = tolerance::dust_floor(scale);
  double total = 0.0;
  for (const Complex& z : spectrum.values) {
    if (z.real() > floor) total += std::sqrt(z.real());
  }
  return finish(total, FidelityMethod::eigvals);
}

FidelityValue fidelity(const DensityMatrix& rho, const DensityMatrix& sigma, FidelityMethod method) {
  switch (method) {
    case FidelityMethod::two_sqrtm:
      return fidelity_two_sqrtm(rho, sigma);
    case FidelityMethod::three_svd:
      return fidelity_three_svd(rho, sigma);
    case FidelityMethod::sqrtmh_eigvalsh:
      return fidelity_sqrtmh_eigvalsh(rho, sigma);
    case FidelityMethod::sqrtm_svd_svd:
      return fidelity_sqrtm_svd_svd(rho, sigma);
    case FidelityMethod::eigvals:
      return fidelity_eigvals(rho, sigma);
  }
  throw Error("fidelity: unknown method");
}

double root_fidelity(const FidelityValue& f) { return std::sqrt(f.value); }

}  // namespace qfid
