#pragma once

#include <cstddef>
#include <vector>

#include "qfid/complex_matrix.hpp"
#include "qfid/spectrum.hpp"

/// Dense complex linear-algebra kernels.
///
/// Every function here is a pure function of its arguments and is safe to
/// call concurrently. None of them spawn threads.
namespace qfid {

/// Hermitian eigendecomposition A = V diag(eigenvalues) V^H.
struct EighResult {
  std::vector<double> eigenvalues;  // nondecreasing
  ComplexMatrix eigenvectors;       // unitary, column i pairs with eigenvalues[i]
};

/// A = U diag(singular_values) V^H.
struct SvdResult {
  ComplexMatrix u;
  std::vector<double> singular_values;  // nonincreasing, nonnegative
  ComplexMatrix v;
};

enum class SqrtmRoute { hermitian_eig, svd };

namespace tolerance {

/// Allowed ||A - A^H||_F before a Hermitian kernel rejects A.
double hermiticity(const ComplexMatrix& a);
/// Most negative eigenvalue accepted as "PSD": 1e-10 * max(1, Re Tr A).
double psd(const ComplexMatrix& a);
/// Eigen- and singular values at or below this are rounding dust and are
/// treated as exact zeros before taking square roots. It is a small multiple
/// of eps * scale and does not grow with the dimension: a larger floor
/// discards genuine eigenvalues of full-rank states, a smaller one lets the
/// square root amplify noise on rank-deficient ones.
double dust_floor(double scale);

}  // namespace tolerance

/// Upper bound on QR sweeps per decomposition, as a multiple of dim.
inline constexpr std::size_t kSweepsPerDim = 100;

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Requires A Hermitian within tolerance::hermiticity; callers holding a
/// product that is Hermitian only in exact arithmetic must symmetrize first.
EighResult eigh(const ComplexMatrix& a);
/// Eigenvalues only (nondecreasing); no eigenvectors are formed.
std::vector<double> eigvalsh(const ComplexMatrix& a);

/// All n eigenvalues of a general square matrix, without eigenvectors.
Spectrum eigvals_general(const ComplexMatrix& a);

SvdResult svd(const ComplexMatrix& a);
/// Singular values only (nonincreasing); no singular vectors are formed.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Positive square root of a Hermitian PSD matrix.
///
/// Throws NotHermitian or NotPsd when the input is outside tolerance. The
/// result is exactly Hermitian. Eigenvalues at or below the dust floor map
/// to zero.
ComplexMatrix sqrtm_psd(const ComplexMatrix& a, SqrtmRoute route);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& a);

/// (M + M^H) / 2.
ComplexMatrix symmetrize(const ComplexMatrix& m);

}  // namespace qfid
