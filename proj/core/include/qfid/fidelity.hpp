#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "qfid/spectrum.hpp"
#include "qfid/states.hpp"

namespace qfid {

/// The five routes to F(rho, sigma) = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
enum class FidelityMethod { two_sqrtm, three_svd, sqrtmh_eigvalsh, sqrtm_svd_svd, eigvals };

inline constexpr std::array<FidelityMethod, 5> kAllMethods = {
    FidelityMethod::two_sqrtm, FidelityMethod::three_svd, FidelityMethod::sqrtmh_eigvalsh,
    FidelityMethod::sqrtm_svd_svd, FidelityMethod::eigvals};

/// Identifier used in files and on the command line, e.g. "sqrtmh_eigvalsh".
std::string_view method_tag(FidelityMethod m);
/// Plot legend text, e.g. "sqrtmh + eigvalsh".
std::string_view method_label(FidelityMethod m);
std::optional<FidelityMethod> parse_method(std::string_view tag);
/// Position in kAllMethods; fixes report row order.
std::size_t method_rank(FidelityMethod m);

/// Raw results within this distance outside [0, 1] are rounding and get clamped.
inline constexpr double kFidelitySlack = 1e-9;

struct FidelityValue {
  double value = 0.0;  // clamped to [0, 1]
  double raw = 0.0;    // as computed, within [-kFidelitySlack, 1 + kFidelitySlack]
  FidelityMethod method = FidelityMethod::two_sqrtm;
};

/// Reference route: both square roots by Hermitian eigendecomposition.
FidelityValue fidelity_two_sqrtm(const DensityMatrix& rho, const DensityMatrix& sigma);
/// ||sqrt(rho) sqrt(sigma)||_1^2; square roots and the trace norm all by SVD.
FidelityValue fidelity_three_svd(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Eigenvalues of the symmetrized sqrt(rho) sigma sqrt(rho) by the Hermitian solver.
FidelityValue fidelity_sqrtmh_eigvalsh(const DensityMatrix& rho, const DensityMatrix& sigma);
/// As sqrtmh_eigvalsh with SVD in place of both Hermitian decompositions.
FidelityValue fidelity_sqrtm_svd_svd(const DensityMatrix& rho, const DensityMatrix& sigma);
/// (sum_i sqrt(lambda_i(rho sigma)))^2: one product and one general
/// eigenvalue call, no eigenvectors and no matrix square root.
FidelityValue fidelity_eigvals(const DensityMatrix& rho, const DensityMatrix& sigma);

FidelityValue fidelity(const DensityMatrix& rho, const DensityMatrix& sigma, FidelityMethod method);

/// sqrt(F), the other convention found in the literature.
double root_fidelity(const FidelityValue& f);

/// Clamped spectrum of rho * sigma; exposed for the non-negativity checks.
/// Throws SpectrumRejected when a value is materially negative or complex.
Spectrum product_spectrum(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qfid
