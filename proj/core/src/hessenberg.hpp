#pragma once

#include <vector>

#include "qfid/complex_matrix.hpp"

namespace qfid::detail {

/// A = Q H Q^H with H upper Hessenberg. `packed` holds H on and above the
/// first subdiagonal and the reflector essentials below it.
struct Hessenberg {
  DenseMatrix packed;
  Eigen::VectorXcd taus;  // max(n - 2, 0) coefficients
};

/// Blocked Householder reduction. Panels of `block` columns are reduced with
/// matrix-vector work; the trailing matrix is then updated with matrix
/// products, so about 80% of the flops run at level 3.
Hessenberg reduce_to_hessenberg(DenseMatrix a, Eigen::Index block = 32);

DenseMatrix hessenberg_q(const Hessenberg& h);
/// H with the reflector storage cleared.
DenseMatrix hessenberg_h(const Hessenberg& h);

/// Eigenvalues of an upper Hessenberg matrix by single-shift complex QR
/// with Wilkinson shifts. Only the active window is updated, so no Schur
/// form is produced. Throws ConvergenceFailure after `sweep_cap` sweeps.
std::vector<Complex> hessenberg_eigenvalues(DenseMatrix h, std::size_t sweep_cap);

}  // namespace qfid::detail
