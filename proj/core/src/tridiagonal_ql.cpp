#include "tridiagonal_ql.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qfid/errors.hpp"

namespace qfid::detail {

namespace {

// Rotates columns i and i + 1 of z: the inner loop of the eigenvector update.
inline void rotate_columns(RealMatrix& z, Eigen::Index i, double c, double s) {
  double* zi = z.col(i).data();
  double* zj = z.col(i + 1).data();
  const Eigen::Index rows = z.rows();
  for (Eigen::Index k = 0; k < rows; ++k) {
    const double f = zj[k];
    zj[k] = s * zi[k] + c * f;
    zi[k] = c * zi[k] - s * f;
  }
}

}  // namespace

void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& off, RealMatrix* z,
                    std::size_t sweep_cap) {
  const std::size_t n = diag.size();
  if (n <= 1) return;
  off.resize(n);
  off[n - 1] = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  std::size_t sweeps = 0;
  for (std::size_t l = 0; l < n; ++l) {
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(off[m]) <= eps * dd) break;
      }
      if (m == l) break;

      if (++sweeps > sweep_cap) {
        throw ConvergenceFailure("tridiagonal QL did not converge within " +
                                 std::to_string(sweep_cap) + " sweeps");
      }

      // Wilkinson-style shift from the leading 2x2 of the unreduced block.
      double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
      double r = std::hypot(g, 1.0);
      g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * off[i];
        const double b = c * off[i];
        r = std::hypot(f, g);
        off[i + 1] = r;
        if (r == 0.0) {
          diag[i + 1] -= p;
          off[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = diag[i + 1] - p;
        r = (diag[i] - g) * s + 2.0 * c * b;
        p = s * r;
        diag[i + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) rotate_columns(*z, static_cast<Eigen::Index>(i), c, s);
      }
      if (underflow) continue;
      diag[l] -= p;
      off[l] = g;
      off[m] = 0.0;
    }
  }
}

}  // namespace qfid::detail
