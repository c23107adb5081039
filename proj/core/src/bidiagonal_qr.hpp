#pragma once

#include <cstddef>
#include <vector>

#include "qfid/complex_matrix.hpp"

namespace qfid::detail {

/// Implicit-shift QR on a real upper bidiagonal B (diagonal `diag`, superdiagonal
/// `off` with off[i] at (i, i+1)).
///
/// On return `diag` holds the singular values, unsorted and possibly negative;
/// `off` is zero. Left rotations are accumulated into the columns of `u` and
/// right rotations into the columns of `v` when those are non-null, so that
/// U_in B V_in^T = U_out diag V_out^T. Throws ConvergenceFailure after
/// `sweep_cap` sweeps.
void bidiagonal_qr(std::vector<double>& diag, std::vector<double>& off, RealMatrix* u,
                   RealMatrix* v, std::size_t sweep_cap);

}  // namespace qfid::detail
