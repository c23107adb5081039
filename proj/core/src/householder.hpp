#pragma once

#include <Eigen/Core>
#include <Eigen/Householder>

#include "qfid/complex_matrix.hpp"

namespace qfid::detail {

/// Elementary reflector H = I - tau v v^H with v(0) = 1 and H^H x = beta e0.
struct Reflector {
  Complex tau;
  double beta;
};

/// Turns x into [beta, v(1:)] in place and returns (tau, beta). The head
/// element of x ends up holding beta.
template <typename Vec>
Reflector make_reflector(Vec&& x) {
  Reflector r{};
  // Eigen's coefficient satisfies (I - tau v v^H) x = beta e0; conjugating it
  // gives the adjoint form stored here.
  x.makeHouseholderInPlace(r.tau, r.beta);
  r.tau = std::conj(r.tau);
  x(0) = r.beta;
  return r;
}

/// Dense Q = H_0 H_1 ... H_{k-1}, where reflector i has its unit head at row
/// i + shift and its essential part stored below that row in column i of
/// `vectors`.
DenseMatrix form_q(const DenseMatrix& vectors, const Eigen::VectorXcd& taus, Eigen::Index shift);

/// Q * Z for complex Q and real Z, as two real products.
DenseMatrix times_real(const DenseMatrix& q, const RealMatrix& z);

}  // namespace qfid::detail
