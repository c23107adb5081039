#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Core>

namespace qfid {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Dense square complex matrix, column-major.
///
/// The only invariant carried by the type is squareness with dim >= 1;
/// finiteness is checked at the system boundary (validate, file reader)
/// rather than after every kernel.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);

  /// Takes ownership of a dense Eigen matrix. Throws DimensionMismatch if it
  /// is not square or is empty.
  explicit ComplexMatrix(DenseMatrix m);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  const DenseMatrix& dense() const& { return m_; }
  DenseMatrix&& dense() && { return std::move(m_); }

  ComplexMatrix adjoint() const;
  /// (A + A^H) / 2.
  ComplexMatrix hermitian_part() const;

  Complex trace() const;
  double frobenius_norm() const;
  /// ||A - A^H||_F.
  double hermiticity_defect() const;
  bool is_finite() const;

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  DenseMatrix m_;
};

}  // namespace qfid
