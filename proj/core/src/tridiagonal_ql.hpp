#pragma once

#include <cstddef>
#include <vector>

#include "qfid/complex_matrix.hpp"

namespace qfid::detail {

/// Implicit-shift QL iteration on a real symmetric tridiagonal matrix.
///
/// `diag` has n entries, `off` has n entries with off[i] coupling rows i and
/// i + 1 (off[n-1] is scratch). On return `diag` holds the eigenvalues in no
/// particular order. When `z` is non-null its columns are rotated alongside,
/// so passing the identity yields the eigenvectors of T and passing Q yields
/// those of Q T Q^T. Throws ConvergenceFailure after `sweep_cap` sweeps.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& off, RealMatrix* z,
                    std::size_t sweep_cap);

}  // namespace qfid::detail
