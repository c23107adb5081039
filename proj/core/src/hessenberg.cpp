#include "hessenberg.hpp"

#include <algorithm>

#include "householder.hpp"

namespace qfid::detail {

Hessenberg reduce_to_hessenberg(DenseMatrix a, Eigen::Index block) {
  const Eigen::Index n = a.rows();
  const Eigen::Index nref = std::max<Eigen::Index>(n - 2, 0);
  Hessenberg out;
  out.taus = Eigen::VectorXcd::Zero(nref);
  block = std::max<Eigen::Index>(block, 1);

  DenseMatrix vb;
  DenseMatrix ybot;
  DenseMatrix ytop;
  DenseMatrix t;
  Eigen::VectorXcd tv;
  Eigen::VectorXcd wv;

  for (Eigen::Index c = 0; c < nref; c += block) {
    const Eigen::Index nb = std::min(block, nref - c);
    const Eigen::Index r0 = c + 1;  // first row touched by this panel's reflectors
    const Eigen::Index mb = n - r0;

    vb.setZero(mb, nb);
    ybot.setZero(mb, nb);
    t.setZero(nb, nb);

    for (Eigen::Index q = 0; q < nb; ++q) {
      const Eigen::Index j = c + q;
      if (q > 0) {
        // Bring column j up to date with the q reflectors already in the panel:
        // right update through Y = A V T, then left update by (I - V T^H V^H).
        auto col = a.col(j).segment(r0, mb);
        col.noalias() -= ybot.leftCols(q) * vb.row(j - r0).head(q).adjoint();
        wv.noalias() = vb.leftCols(q).adjoint() * col;
        wv = t.topLeftCorner(q, q).triangularView<Eigen::Upper>().adjoint() * wv;
        col.noalias() -= vb.leftCols(q) * wv;
      }

      auto x = a.col(j).tail(n - j - 1);
      const Reflector r = make_reflector(x);
      out.taus(j) = r.tau;
      vb(j + 1 - r0, q) = 1.0;
      vb.col(q).tail(n - j - 2) = x.tail(n - j - 2);

      // Y(:, q) = tau (A v - Y_prev V_prev^H v), T(:, q) = -tau T_prev V_prev^H v.
      const Eigen::Index len = n - j - 1;
      auto v = vb.col(q).tail(len);
      ybot.col(q).noalias() = a.block(r0, j + 1, mb, len) * v;
      if (q > 0) {
        tv.noalias() = vb.leftCols(q).bottomRows(len).adjoint() * v;
        ybot.col(q).noalias() -= ybot.leftCols(q) * tv;
        t.col(q).head(q).noalias() = t.topLeftCorner(q, q).triangularView<Eigen::Upper>() * tv;
        t.col(q).head(q) *= -r.tau;
      }
      ybot.col(q) *= r.tau;
      t(q, q) = r.tau;
    }

    ytop.noalias() = a.block(0, r0, r0, mb) * vb;
    ytop = ytop * t.triangularView<Eigen::Upper>();

    const Eigen::Index c_next = c + nb;
    const Eigen::Index ncols = n - c_next;
    if (ncols > 0) {
      const auto v_trail = vb.bottomRows(ncols);
      a.block(0, c_next, r0, ncols).noalias() -= ytop * v_trail.adjoint();
      a.block(r0, c_next, mb, ncols).noalias() -= ybot * v_trail.adjoint();
    }
    if (nb > 1) {
      a.block(0, r0, r0, nb - 1).noalias() -= ytop * vb.topRows(nb - 1).adjoint();
    }
    if (ncols > 0) {
      auto sub = a.block(r0, c_next, mb, ncols);
      DenseMatrix w = vb.adjoint() * sub;
      w = t.triangularView<Eigen::Upper>().adjoint() * w;
      sub.noalias() -= vb * w;
    }
  }
  out.packed = std::move(a);
  return out;
}

DenseMatrix hessenberg_q(const Hessenberg& h) { return form_q(h.packed, h.taus, 1); }

DenseMatrix hessenberg_h(const Hessenberg& h) {
  DenseMatrix out = h.packed;
  const Eigen::Index n = out.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j + 2; i < n; ++i) out(i, j) = 0.0;
  }
  return out;
}

}  // namespace qfid::detail
