#include "bidiagonal_qr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qfid/errors.hpp"

namespace qfid::detail {

namespace {

// (x_i, x_j) <- (c x_i + s x_j, -s x_i + c x_j) on two columns of m.
inline void rotate(RealMatrix* m, Eigen::Index i, Eigen::Index j, double c, double s) {
  if (m == nullptr) return;
  double* xi = m->col(i).data();
  double* xj = m->col(j).data();
  const Eigen::Index rows = m->rows();
  for (Eigen::Index k = 0; k < rows; ++k) {
    const double a = xi[k];
    const double b = xj[k];
    xi[k] = c * a + s * b;
    xj[k] = -s * a + c * b;
  }
}

struct Rotation {
  double c;
  double s;
  double r;
};

// c, s with -s y + c z = 0 and c y + s z = r.
inline Rotation annihilate(double y, double z) {
  const double r = std::hypot(y, z);
  if (r == 0.0) return {1.0, 0.0, 0.0};
  return {y / r, z / r, r};
}

}  // namespace

void bidiagonal_qr(std::vector<double>& d, std::vector<double>& e, RealMatrix* u, RealMatrix* v,
                   std::size_t sweep_cap) {
  const std::size_t n = d.size();
  e.resize(n);
  if (n == 0) return;
  e[n - 1] = 0.0;
  if (n == 1) return;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double anorm = 0.0;
  for (std::size_t i = 0; i < n; ++i) anorm = std::max(anorm, std::abs(d[i]) + std::abs(e[i]));
  if (anorm == 0.0) return;
  const double small = eps * anorm;
  const auto idx = [](std::size_t i) { return static_cast<Eigen::Index>(i); };

  std::size_t sweeps = 0;
  std::size_t z = n - 1;
  while (z > 0) {
    if (std::abs(e[z - 1]) <= small) {
      e[z - 1] = 0.0;
      --z;
      continue;
    }
    std::size_t p = z - 1;
    while (p > 0 && std::abs(e[p - 1]) > small) --p;
    if (p > 0) e[p - 1] = 0.0;

    // A zero on the diagonal splits the block once its row (or column) is cleared.
    bool split = false;
    for (std::size_t i = p; i <= z; ++i) {
      if (std::abs(d[i]) > small) continue;
      d[i] = 0.0;
      if (i < z) {
        // Chase e[i] to the right with left rotations on rows (j, i).
        double f = e[i];
        e[i] = 0.0;
        for (std::size_t j = i + 1; j <= z && f != 0.0; ++j) {
          // new row_j = c row_j + s row_i, new row_i = -s row_j + c row_i
          const Rotation g = annihilate(d[j], f);
          d[j] = g.r;
          if (j < z) {
            f = -g.s * e[j];
            e[j] = g.c * e[j];
          }
          rotate(u, idx(j), idx(i), g.c, g.s);
        }
      } else {
        // Chase e[z-1] upwards with right rotations on columns (j, z).
        double f = e[z - 1];
        e[z - 1] = 0.0;
        for (std::size_t j = z; j-- > p && f != 0.0;) {
          const Rotation g = annihilate(d[j], f);
          d[j] = g.r;
          if (j > p) {
            f = -g.s * e[j - 1];
            e[j - 1] = g.c * e[j - 1];
          }
          rotate(v, idx(j), idx(z), g.c, g.s);
        }
      }
      split = true;
      break;
    }
    if (split) continue;

    if (++sweeps > sweep_cap) {
      throw ConvergenceFailure("bidiagonal QR did not converge within " +
                               std::to_string(sweep_cap) + " sweeps");
    }

    // Wilkinson shift from the trailing 2x2 of B^T B, computed on scaled data.
    double scale = 0.0;
    for (std::size_t i = p; i <= z; ++i) {
      scale = std::max(scale, std::abs(d[i]));
      if (i < z) scale = std::max(scale, std::abs(e[i]));
    }
    const double dz1 = d[z - 1] / scale;
    const double dz = d[z] / scale;
    const double ez1 = e[z - 1] / scale;
    const double ez2 = (z - 1 > p) ? e[z - 2] / scale : 0.0;
    const double a11 = dz1 * dz1 + ez2 * ez2;
    const double a12 = dz1 * ez1;
    const double a22 = dz * dz + ez1 * ez1;
    const double delta = 0.5 * (a11 - a22);
    double mu = a22;
    if (a12 != 0.0) mu = a22 - a12 * a12 / (delta + std::copysign(std::hypot(delta, a12), delta));

    const double dp = d[p] / scale;
    double y = dp * dp - mu;
    double w = dp * (e[p] / scale);

    for (std::size_t k = p; k < z; ++k) {
      // Right rotation on columns (k, k+1): new col_k = c col_k - s col_k+1.
      Rotation g = annihilate(y, w);
      if (k > p) e[k - 1] = g.r;
      double a = d[k];
      double b = e[k];
      d[k] = g.c * a + g.s * b;
      e[k] = -g.s * a + g.c * b;
      double bulge = g.s * d[k + 1];
      d[k + 1] = g.c * d[k + 1];
      rotate(v, idx(k), idx(k + 1), g.c, g.s);

      // Left rotation on rows (k, k+1) clears the bulge at (k+1, k).
      g = annihilate(d[k], bulge);
      d[k] = g.r;
      a = e[k];
      b = d[k + 1];
      e[k] = g.c * a + g.s * b;
      d[k + 1] = -g.s * a + g.c * b;
      if (k + 1 < z) {
        bulge = g.s * e[k + 1];
        e[k + 1] = g.c * e[k + 1];
        y = e[k];
        w = bulge;
      }
      rotate(u, idx(k), idx(k + 1), g.c, g.s);
    }
  }
}

}  // namespace qfid::detail
