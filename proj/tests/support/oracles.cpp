#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "qfid/rng.hpp"

namespace qfid::oracle {

ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

Complex lu_determinant(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  }
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m[i][k]) > std::abs(m[pivot][k])) pivot = i;
    }
    if (m[pivot][k] == Complex(0.0)) return 0.0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  const DenseMatrix h = 0.5 * (a.dense() + a.dense().adjoint());
  const Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

std::vector<double> singular_values_via_gram(const ComplexMatrix& a) {
  const DenseMatrix g = a.dense().adjoint() * a.dense();
  std::vector<double> s = hermitian_eigenvalues(ComplexMatrix(g));
  for (double& x : s) x = std::sqrt(std::max(x, 0.0));
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

namespace {

DenseMatrix eigen_sqrt(const DenseMatrix& a) {
  const DenseMatrix h = 0.5 * (a + a.adjoint());
  const Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h);
  // Rank cutoff n * eps * max|lambda|, the usual numerical-rank convention.
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const double cutoff = static_cast<double>(a.rows()) * std::numeric_limits<double>::epsilon() *
                        lambda.cwiseAbs().maxCoeff();
  const Eigen::VectorXd roots = lambda.unaryExpr([&](double x) { return x > cutoff ? std::sqrt(x) : 0.0; });
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double fidelity_definition(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  const DenseMatrix r = eigen_sqrt(rho.dense());
  const DenseMatrix inner = eigen_sqrt(r * sigma.dense() * r);
  const double t = inner.trace().real();
  return t * t;
}

double bhattacharyya_fidelity(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::sqrt(p[i] * q[i]);
  return s * s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.dense() - b.dense()).cwiseAbs().maxCoeff();
}

std::vector<CorpusEntry> theorem_corpus(std::size_t dim_lo, std::size_t dim_hi, std::size_t per_cell,
                                        std::uint64_t master_seed) {
  std::vector<CorpusEntry> out;
  std::uint64_t index = 0;
  for (std::size_t d = dim_lo; d <= dim_hi; ++d) {
    for (const FamilyTag f : kAllFamilies) {
      for (std::size_t i = 0; i < per_cell; ++i) out.push_back({f, d, derive_seed(master_seed, index++)});
    }
  }
  return out;
}

}  // namespace qfid::oracle
