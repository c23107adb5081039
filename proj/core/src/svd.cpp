#include <algorithm>
#include <cmath>
#include <numeric>

#include "bidiagonal_qr.hpp"
#include "householder.hpp"
#include "qfid/kernels.hpp"

namespace qfid {
namespace detail {

namespace {

/// A = U B V^H with B real upper bidiagonal.
struct Bidiagonal {
  std::vector<double> diag;
  std::vector<double> off;
  DenseMatrix left_vectors;   // column k: essential part of U's reflector k below row k
  Eigen::VectorXcd left_taus;
  DenseMatrix right_vectors;  // column k: essential part of V's reflector k below row k+1
  Eigen::VectorXcd right_taus;
};

Bidiagonal bidiagonalize(DenseMatrix a) {
  const Eigen::Index n = a.rows();
  Bidiagonal b;
  b.diag.resize(static_cast<std::size_t>(n));
  b.off.assign(static_cast<std::size_t>(n), 0.0);
  b.left_taus.resize(n);
  b.right_taus = Eigen::VectorXcd::Zero(std::max<Eigen::Index>(n - 1, 0));
  b.right_vectors = DenseMatrix::Zero(n, n);
  Eigen::VectorXcd work(n);
  Eigen::VectorXcd row(n);

  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index rem = n - k - 1;

    // Left reflector: H^H a(k:, k) = beta e0, then a(k:, k+1:) <- H^H a(k:, k+1:).
    auto x = a.col(k).tail(n - k);
    const Reflector left = make_reflector(x);
    b.left_taus(k) = left.tau;
    b.diag[static_cast<std::size_t>(k)] = left.beta;
    if (rem > 0 && left.tau != Complex(0.0)) {
      x(0) = 1.0;
      auto sub = a.bottomRightCorner(n - k, rem);
      auto w = work.head(rem);
      w.noalias() = sub.adjoint() * x;
      sub.noalias() -= (std::conj(left.tau) * x) * w.adjoint();
      x(0) = left.beta;
    }
    if (rem == 0) break;

    // Right reflector from the conjugated row: a(k, k+1:) G = beta e0^T.
    auto r = row.head(rem);
    r = a.row(k).tail(rem).adjoint();
    const Reflector right = make_reflector(r);
    b.right_taus(k) = right.tau;
    b.off[static_cast<std::size_t>(k)] = right.beta;
    b.right_vectors.col(k).tail(rem) = r;
    a.row(k).tail(rem).setZero();
    if (right.tau != Complex(0.0)) {
      r(0) = 1.0;
      auto sub = a.bottomRightCorner(rem, rem);
      auto y = work.head(rem);
      y.noalias() = sub * r;
      sub.noalias() -= (right.tau * y) * r.adjoint();
    }
  }
  b.left_vectors = std::move(a);
  return b;
}

std::size_t sweep_cap(std::size_t n) { return kSweepsPerDim * std::max<std::size_t>(n, 1); }

}  // namespace

}  // namespace detail

SvdResult svd(const ComplexMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  detail::Bidiagonal b = detail::bidiagonalize(a.dense());
  RealMatrix ub = RealMatrix::Identity(n, n);
  RealMatrix vb = RealMatrix::Identity(n, n);
  detail::bidiagonal_qr(b.diag, b.off, &ub, &vb, detail::sweep_cap(a.dim()));

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return std::abs(b.diag[static_cast<std::size_t>(x)]) > std::abs(b.diag[static_cast<std::size_t>(y)]);
  });
  RealMatrix u_sorted(n, n);
  RealMatrix v_sorted(n, n);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    const double s = b.diag[static_cast<std::size_t>(src)];
    values[static_cast<std::size_t>(j)] = std::abs(s);
    u_sorted.col(j) = ub.col(src);
    v_sorted.col(j) = s < 0.0 ? RealMatrix(-vb.col(src)) : RealMatrix(vb.col(src));
  }

  const DenseMatrix uq = detail::form_q(b.left_vectors, b.left_taus, 0);
  const DenseMatrix vq = detail::form_q(b.right_vectors, b.right_taus, 1);
  return SvdResult{ComplexMatrix(detail::times_real(uq, u_sorted)), std::move(values),
                   ComplexMatrix(detail::times_real(vq, v_sorted))};
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  detail::Bidiagonal b = detail::bidiagonalize(a.dense());
  detail::bidiagonal_qr(b.diag, b.off, nullptr, nullptr, detail::sweep_cap(a.dim()));
  for (double& s : b.diag) s = std::abs(s);
  std::sort(b.diag.begin(), b.diag.end(), std::greater<>());
  return std::move(b.diag);
}

}  // namespace qfid
