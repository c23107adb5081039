#include "qfid/complex_matrix.hpp"

#include <string>

#include "qfid/errors.hpp"

namespace qfid {

ComplexMatrix::ComplexMatrix(std::size_t dim) {
  if (dim == 0) throw DimensionMismatch("matrix dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  m_ = DenseMatrix::Zero(n, n);
}

ComplexMatrix::ComplexMatrix(DenseMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw DimensionMismatch("matrix is " + std::to_string(m_.rows()) + "x" +
                            std::to_string(m_.cols()) + ", expected square");
  }
  if (m_.rows() == 0) throw DimensionMismatch("matrix dimension must be positive");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix out(dim);
  out.m_.setIdentity();
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix out(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix out(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(DenseMatrix(m_.adjoint())); }

ComplexMatrix ComplexMatrix::hermitian_part() const {
  return ComplexMatrix(DenseMatrix((m_ + m_.adjoint()) * 0.5));
}

Complex ComplexMatrix::trace() const { return m_.trace(); }

double ComplexMatrix::frobenius_norm() const { return m_.norm(); }

double ComplexMatrix::hermiticity_defect() const { return (m_ - m_.adjoint()).norm(); }

bool ComplexMatrix::is_finite() const { return m_.allFinite(); }

}  // namespace qfid
