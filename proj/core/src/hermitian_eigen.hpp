#pragma once

#include <vector>

#include "qfid/complex_matrix.hpp"

namespace qfid::detail {

/// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
/// form, A = Q T Q^H. Only the lower triangle of the input is read.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // size n, off[n-1] unused
  DenseMatrix reflectors;   // essential parts below the subdiagonal
  Eigen::VectorXcd taus;    // n - 1 coefficients
};

Tridiagonal tridiagonalize(DenseMatrix a);

/// Dense Q of the reduction.
DenseMatrix tridiagonal_q(const Tridiagonal& t);

}  // namespace qfid::detail
