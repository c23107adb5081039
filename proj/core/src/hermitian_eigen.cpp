#include "hermitian_eigen.hpp"

#include <algorithm>
#include <numeric>

#include "householder.hpp"
#include "qfid/errors.hpp"
#include "qfid/kernels.hpp"
#include "tridiagonal_ql.hpp"

namespace qfid {
namespace detail {

Tridiagonal tridiagonalize(DenseMatrix a) {
  const Eigen::Index n = a.rows();
  Tridiagonal t;
  t.diag.resize(static_cast<std::size_t>(n));
  t.off.assign(static_cast<std::size_t>(n), 0.0);
  t.taus.resize(std::max<Eigen::Index>(n - 1, 0));
  Eigen::VectorXcd w(n);

  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const Eigen::Index rem = n - i - 1;
    auto v = a.col(i).tail(rem);
    const Reflector r = make_reflector(v);
    t.taus(i) = r.tau;
    t.off[static_cast<std::size_t>(i)] = r.beta;
    t.diag[static_cast<std::size_t>(i)] = a(i, i).real();
    if (r.tau == Complex(0.0)) continue;

    // A22 <- H^H A22 H as a Hermitian rank-2 update A22 -= v w^H + w v^H.
    v(0) = 1.0;
    auto a22 = a.bottomRightCorner(rem, rem);
    auto y = w.head(rem);
    y.noalias() = r.tau * (a22.selfadjointView<Eigen::Lower>() * v);
    const Complex yv = y.dot(v);  // y^H v
    y -= (0.5 * r.tau * yv) * v;
    a22.selfadjointView<Eigen::Lower>().rankUpdate(v, y, Complex(-1.0));
    v(0) = r.beta;
  }
  if (n > 0) t.diag[static_cast<std::size_t>(n - 1)] = a(n - 1, n - 1).real();
  t.reflectors = std::move(a);
  return t;
}

DenseMatrix tridiagonal_q(const Tridiagonal& t) { return form_q(t.reflectors, t.taus, 1); }

}  // namespace detail

namespace {

void require_hermitian(const ComplexMatrix& a, const char* who) {
  const double defect = a.hermiticity_defect();
  if (defect > tolerance::hermiticity(a)) {
    throw NotHermitian(std::string(who) + ": input is not Hermitian (||A - A^H||_F = " +
                       std::to_string(defect) + ")");
  }
}

std::size_t sweep_cap(std::size_t n) { return kSweepsPerDim * std::max<std::size_t>(n, 1); }

}  // namespace

EighResult eigh(const ComplexMatrix& a) {
  require_hermitian(a, "eigh");
  const auto n = static_cast<Eigen::Index>(a.dim());
  detail::Tridiagonal t = detail::tridiagonalize(a.dense());
  RealMatrix z = RealMatrix::Identity(n, n);
  detail::tridiagonal_ql(t.diag, t.off, &z, sweep_cap(a.dim()));

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return t.diag[static_cast<std::size_t>(x)] < t.diag[static_cast<std::size_t>(y)];
  });
  RealMatrix z_sorted(n, n);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    z_sorted.col(j) = z.col(src);
    values[static_cast<std::size_t>(j)] = t.diag[static_cast<std::size_t>(src)];
  }

  const DenseMatrix q = detail::tridiagonal_q(t);
  return EighResult{std::move(values), ComplexMatrix(detail::times_real(q, z_sorted))};
}

std::vector<double> eigvalsh(const ComplexMatrix& a) {
  require_hermitian(a, "eigvalsh");
  detail::Tridiagonal t = detail::tridiagonalize(a.dense());
  detail::tridiagonal_ql(t.diag, t.off, nullptr, sweep_cap(a.dim()));
  std::sort(t.diag.begin(), t.diag.end());
  return std::move(t.diag);
}

}  // namespace qfid
