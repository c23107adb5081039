#include "householder.hpp"

#include <Eigen/Householder>

namespace qfid::detail {

DenseMatrix form_q(const DenseMatrix& vectors, const Eigen::VectorXcd& taus, Eigen::Index shift) {
  const Eigen::Index n = vectors.rows();
  DenseMatrix q = DenseMatrix::Identity(n, n);
  if (taus.size() == 0) return q;
  Eigen::HouseholderSequence<DenseMatrix, Eigen::VectorXcd> seq(vectors, taus);
  seq.setLength(taus.size()).setShift(shift);
  seq.evalTo(q);
  return q;
}

DenseMatrix times_real(const DenseMatrix& q, const RealMatrix& z) {
  const RealMatrix re = q.real() * z;
  const RealMatrix im = q.imag() * z;
  DenseMatrix out(q.rows(), z.cols());
  out.real() = re;
  out.imag() = im;
  return out;
}

}  // namespace qfid::detail
