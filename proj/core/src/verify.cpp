#include "qfid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "qfid/errors.hpp"
#include "qfid/fidelity.hpp"
#include "qfid/kernels.hpp"
#include "qfid/lemmas.hpp"
#include "qfid/number_format.hpp"
#include "qfid/rng.hpp"
#include "qfid/spectrum.hpp"
#include "qfid/states.hpp"

namespace qfid {

namespace {

// Measures one case; returns its deviation. Throwing counts as a failure.
using CaseFn = std::function<double(std::size_t dim, std::uint64_t seed)>;

struct Suite {
  const char* name;
  double tolerance;
  CaseFn run;
};

std::uint64_t case_seed(std::uint64_t seed, std::size_t suite, std::size_t dim, std::size_t trial) {
  return derive_seed(seed, (static_cast<std::uint64_t>(suite) << 48) ^
                               (static_cast<std::uint64_t>(dim) << 24) ^ trial);
}

FamilyTag family_for(std::uint64_t seed) {
  constexpr std::size_t kCount = std::size(kAllFamilies);
  return kAllFamilies[mix64(seed) % kCount];
}

double max_method_deviation(const DensityMatrix& rho, const DensityMatrix& sigma, double expected) {
  double worst = 0.0;
  for (const FidelityMethod m : kAllMethods) {
    worst = std::max(worst, std::abs(fidelity(rho, sigma, m).value - expected));
  }
  return worst;
}

double trace_eigensum(std::size_t dim, std::uint64_t seed) {
  return trace_eigensum_defect(random_ginibre(dim, seed));
}

// Returned deviations are normalized so that every suite compares against its tolerance.
double cyclicity(std::size_t dim, std::uint64_t seed) {
  const ComplexMatrix a = random_ginibre(dim, derive_seed(seed, 1));
  const ComplexMatrix b = random_ginibre(dim, derive_seed(seed, 2));
  const CyclicityReport r = check_cyclicity(a, b, 1.0);
  return r.max_deviation / r.threshold;
}

double mapped_cyclicity(std::size_t dim, std::uint64_t seed) {
  const auto [rho, sigma] = generate_pair(StateFamily{family_for(seed), std::nullopt}, dim, seed);
  const CyclicityReport r = check_mapped_cyclicity(rho.matrix(), sigma.matrix(), 1.0);
  // The mapped spectrum of AB against the Hermitian form (sqrt B sqrt A)^H (sqrt B sqrt A).
  const ComplexMatrix x = matmul(sqrtm_psd(sigma.matrix(), SqrtmRoute::hermitian_eig),
                                 sqrtm_psd(rho.matrix(), SqrtmRoute::hermitian_eig));
  const ComplexMatrix form = symmetrize(matmul(x.adjoint(), x));
  std::vector<Complex> hermitian;
  for (const double v : eigvalsh(sqrtm_psd(form, SqrtmRoute::hermitian_eig))) {
    hermitian.emplace_back(v, 0.0);
  }
  return std::max(r.max_deviation, spectrum_deviation(r.spectrum_ab, hermitian));
}

double theorem(std::size_t dim, std::uint64_t seed) {
  const auto [rho, sigma] = generate_pair(StateFamily{family_for(seed), std::nullopt}, dim, seed);
  return std::abs(fidelity_two_sqrtm(rho, sigma).raw - fidelity_eigvals(rho, sigma).raw);
}

double symmetry(std::size_t dim, std::uint64_t seed) {
  const auto [rho, sigma] = generate_pair(StateFamily{family_for(seed), std::nullopt}, dim, seed);
  return std::abs(fidelity_eigvals(rho, sigma).raw - fidelity_eigvals(sigma, rho).raw);
}

// Deviation is how far the identical pair falls below 1; values outside [0, 1] fail outright.
double range(std::size_t dim, std::uint64_t seed) {
  const auto [rho, sigma] = generate_pair(StateFamily{family_for(seed), std::nullopt}, dim, seed);
  for (const FidelityMethod m : kAllMethods) {
    const double v = fidelity(rho, sigma, m).value;
    if (!(v >= 0.0 && v <= 1.0)) return std::numeric_limits<double>::infinity();
  }
  const DensityMatrix same = random_density(dim, dim, derive_seed(seed, 1));
  double worst = 0.0;
  for (const FidelityMethod m : kAllMethods) {
    worst = std::max(worst, 1.0 - fidelity(same, same, m).value);
  }
  return worst;
}

double commuting(std::size_t dim, std::uint64_t seed) {
  const CommutingPair pair = random_commuting_pair(dim, seed);
  double bhattacharyya = 0.0;
  for (std::size_t i = 0; i < dim; ++i) bhattacharyya += std::sqrt(pair.p[i] * pair.q[i]);
  return max_method_deviation(pair.rho, pair.sigma, bhattacharyya * bhattacharyya);
}

double pure(std::size_t dim, std::uint64_t seed) {
  const DensityMatrix rho = random_pure(dim, derive_seed(seed, 1));
  const DensityMatrix sigma = random_pure(dim, derive_seed(seed, 2));
  // For pure states |<psi|phi>|^2 = Tr(rho sigma).
  const double overlap = matmul(rho.matrix(), sigma.matrix()).trace().real();
  return max_method_deviation(rho, sigma, overlap);
}

double unitary_invariance(std::size_t dim, std::uint64_t seed) {
  const auto [rho, sigma] = generate_pair(StateFamily{family_for(seed), std::nullopt}, dim, seed);
  const ComplexMatrix u = random_unitary(dim, derive_seed(seed, 1));
  const auto rotate = [&](const DensityMatrix& s) {
    return validate(symmetrize(matmul(matmul(u, s.matrix()), u.adjoint())));
  };
  const DensityMatrix rho_u = rotate(rho);
  const DensityMatrix sigma_u = rotate(sigma);
  double worst = 0.0;
  for (const FidelityMethod m : kAllMethods) {
    worst = std::max(worst, std::abs(fidelity(rho_u, sigma_u, m).raw - fidelity(rho, sigma, m).raw));
  }
  return worst;
}

// Any rejection throws SpectrumRejected; the deviation is the worst
// imaginary or negative part relative to the clamp scale.
double product_nonnegative(std::size_t dim, std::uint64_t seed) {
  const auto [rho, sigma] = generate_pair(StateFamily{family_for(seed), std::nullopt}, dim, seed);
  const Spectrum raw = eigvals_general(matmul(rho.matrix(), sigma.matrix()));
  product_spectrum(rho, sigma);
  const double scale = rho.matrix().frobenius_norm() * sigma.matrix().frobenius_norm();
  double worst = 0.0;
  for (const Complex& z : raw.values) {
    worst = std::max({worst, std::abs(z.imag()), -z.real()});
  }
  return worst / scale;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"trace-eigensum", 1e-10, trace_eigensum},
      {"cyclicity", 1e-8, cyclicity},
      {"mapped-cyclicity", 1e-8, mapped_cyclicity},
      {"theorem", 1e-9, theorem},
      {"symmetry", 1e-10, symmetry},
      {"range", 1e-10, range},
      {"commuting", 1e-10, commuting},
      {"pure", 1e-10, pure},
      {"unitary-invariance", 1e-9, unitary_invariance},
      {"product-spectrum", kClampTolerance, product_nonnegative},
  };
  return all;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::optional<std::string> VerifyReport::first_failing_suite() const {
  for (const SuiteResult& s : suites) {
    if (!s.passed) return s.name;
  }
  return std::nullopt;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  if (cfg.trials == 0) throw InvalidArgument("verify: trials must be at least 1");
  if (cfg.dims.empty()) throw InvalidArgument("verify: no dimensions given");
  for (const std::size_t d : cfg.dims) {
    if (d == 0) throw InvalidArgument("verify: dimensions must be positive");
  }

  VerifyReport report;
  const std::vector<Suite>& all = suites();
  for (std::size_t s = 0; s < all.size(); ++s) {
    SuiteResult result{all[s].name, true, 0.0, all[s].tolerance, 0, {}};
    for (const std::size_t dim : cfg.dims) {
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed = case_seed(cfg.seed, s, dim, t);
        ++result.cases;
        std::string failure;
        try {
          const double dev = all[s].run(dim, seed);
          result.max_deviation = std::max(result.max_deviation, dev);
          if (!(dev <= result.tolerance)) {
            failure = "deviation " + format_g17(dev);
          }
        } catch (const Error& e) {
          failure = e.what();
        }
        if (!failure.empty()) {
          if (result.passed) {
            result.first_failure = "dim " + std::to_string(dim) + ", trial " + std::to_string(t) +
                                   ": " + failure;
          }
          result.passed = false;
        }
      }
    }
    report.suites.push_back(std::move(result));
  }
  return report;
}

}  // namespace qfid
