#include "qfid/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qfid/errors.hpp"

namespace qfid {

namespace tolerance {

double hermiticity(const ComplexMatrix& a) { return 1e-10 * a.frobenius_norm(); }

double psd(const ComplexMatrix& a) { return 1e-10 * std::max(1.0, a.trace().real()); }

double dust_floor(double scale) {
  constexpr double kUnits = 8.0;
  return kUnits * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace tolerance

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("matmul: " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                            " times " + std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
  }
  DenseMatrix c(a.dense().rows(), b.dense().cols());
  c.noalias() = a.dense() * b.dense();
  return ComplexMatrix(std::move(c));
}

ComplexMatrix symmetrize(const ComplexMatrix& m) { return m.hermitian_part(); }

namespace {

void require_hermitian(const ComplexMatrix& a) {
  const double defect = a.hermiticity_defect();
  if (defect > tolerance::hermiticity(a)) {
    throw NotHermitian("sqrtm_psd: input is not Hermitian (||A - A^H||_F = " +
                       std::to_string(defect) + ")");
  }
}

// S = B B^H, formed as an exactly Hermitian product.
ComplexMatrix gram(const DenseMatrix& b) {
  const Eigen::Index n = b.rows();
  DenseMatrix s = DenseMatrix::Zero(n, n);
  s.selfadjointView<Eigen::Lower>().rankUpdate(b);
  s.triangularView<Eigen::StrictlyUpper>() = s.adjoint();
  for (Eigen::Index i = 0; i < n; ++i) s(i, i) = s(i, i).real();
  return ComplexMatrix(std::move(s));
}

ComplexMatrix sqrtm_eig(const ComplexMatrix& a) {
  EighResult e = eigh(a);
  const double smallest = e.eigenvalues.front();
  if (smallest < -tolerance::psd(a)) {
    throw NotPsd("sqrtm_psd: smallest eigenvalue " + std::to_string(smallest) +
                 " is below the PSD tolerance");
  }
  const double scale = std::max(std::abs(smallest), std::abs(e.eigenvalues.back()));
  const double floor = tolerance::dust_floor(scale);
  DenseMatrix b = std::move(e.eigenvectors).dense();
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    const double lambda = e.eigenvalues[static_cast<std::size_t>(j)];
    b.col(j) *= lambda > floor ? std::sqrt(std::sqrt(lambda)) : 0.0;
  }
  return gram(b);
}

ComplexMatrix sqrtm_svd(const ComplexMatrix& a) {
  require_hermitian(a);
  SvdResult s = svd(a);
  // For Hermitian A, sum(s) - Tr A is twice the magnitude of the negative spectrum.
  const double total = std::accumulate(s.singular_values.begin(), s.singular_values.end(), 0.0);
  const double excess = total - a.trace().real();
  if (excess > 2.0 * tolerance::psd(a)) {
    throw NotPsd("sqrtm_psd: negative spectrum of total magnitude " +
                 std::to_string(0.5 * excess) + " is beyond the PSD tolerance");
  }
  const double floor = tolerance::dust_floor(s.singular_values.front());
  DenseMatrix b = std::move(s.v).dense();
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    const double sigma = s.singular_values[static_cast<std::size_t>(j)];
    b.col(j) *= sigma > floor ? std::sqrt(std::sqrt(sigma)) : 0.0;
  }
  return gram(b);
}

}  // namespace

ComplexMatrix sqrtm_psd(const ComplexMatrix& a, SqrtmRoute route) {
  switch (route) {
    case SqrtmRoute::hermitian_eig:
      return sqrtm_eig(a);
    case SqrtmRoute::svd:
      return sqrtm_svd(a);
  }
  throw Error("sqrtm_psd: unknown route");
}

double trace_norm(const ComplexMatrix& a) {
  const std::vector<double> s = singular_values(a);
  return std::accumulate(s.begin(), s.end(), 0.0);
}

}  // namespace qfid
