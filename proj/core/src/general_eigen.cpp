#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "hessenberg.hpp"
#include "qfid/errors.hpp"
#include "qfid/kernels.hpp"

namespace qfid {
namespace detail {

namespace {

inline double cabs1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Eigenvalue of [[a, b], [c, d]] closest to d.
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  const Complex u = std::sqrt(b) * std::sqrt(c);
  double s = cabs1(u);
  if (s == 0.0) return d;
  const Complex x = 0.5 * (a - d);
  const double sx = cabs1(x);
  s = std::max(s, sx);
  Complex y = s * std::sqrt((x / s) * (x / s) + (u / s) * (u / s));
  if (sx > 0.0) {
    const Complex xn = x / sx;
    if (xn.real() * y.real() + xn.imag() * y.imag() < 0.0) y = -y;
  }
  return d - u * (u / (x + y));
}

// Subdiagonal entry (k, k-1) is negligible, after Ahues and Tisseur.
bool negligible_subdiagonal(const DenseMatrix& h, Eigen::Index k, Eigen::Index lo, Eigen::Index hi) {
  constexpr double ulp = std::numeric_limits<double>::epsilon();
  constexpr double safmin = std::numeric_limits<double>::min();
  const Complex sub = h(k, k - 1);
  if (cabs1(sub) <= safmin) return true;
  double tst = cabs1(h(k - 1, k - 1)) + cabs1(h(k, k));
  if (tst == 0.0) {
    if (k - 2 >= lo) tst += cabs1(h(k - 1, k - 2));
    if (k + 1 <= hi) tst += cabs1(h(k + 1, k));
  }
  if (cabs1(sub) > ulp * tst) return false;
  const double ab = std::max(cabs1(sub), cabs1(h(k - 1, k)));
  const double ba = std::min(cabs1(sub), cabs1(h(k - 1, k)));
  const double aa = std::max(cabs1(h(k, k)), cabs1(h(k - 1, k - 1) - h(k, k)));
  const double bb = std::min(cabs1(h(k, k)), cabs1(h(k - 1, k - 1) - h(k, k)));
  const double s = aa + ab;
  return ba * (ab / s) <= std::max(safmin, ulp * (bb * (aa / s)));
}

// Givens rotation G = [[c, s], [-conj(s), c]] with G [x; y] = [r; 0].
struct Givens {
  double c;
  Complex s;
  Complex r;
};

Givens make_givens(Complex x, Complex y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ay == 0.0) return {1.0, Complex(0.0), x};
  if (ax == 0.0) return {0.0, std::conj(y) / ay, Complex(ay)};
  const double norm = std::hypot(ax, ay);
  const Complex phase = x / ax;
  return {ax / norm, phase * std::conj(y) / norm, phase * norm};
}

// Rows k, k+1 <- G [row k; row k+1] over columns [col_lo, col_hi].
void rotate_rows(DenseMatrix& h, Eigen::Index k, Eigen::Index col_lo, Eigen::Index col_hi,
                 const Givens& g) {
  const double c = g.c;
  const double sr = g.s.real();
  const double si = g.s.imag();
  const Eigen::Index ld = h.outerStride();
  double* p = reinterpret_cast<double*>(h.data() + col_lo * ld + k);
  for (Eigen::Index j = col_lo; j <= col_hi; ++j, p += 2 * ld) {
    const double ar = p[0], ai = p[1], br = p[2], bi = p[3];
    // a' = c a + s b,  b' = -conj(s) a + c b
    p[0] = c * ar + sr * br - si * bi;
    p[1] = c * ai + sr * bi + si * br;
    p[2] = c * br - sr * ar - si * ai;
    p[3] = c * bi - sr * ai + si * ar;
  }
}

// Columns k, k+1 <- [col k, col k+1] G^H over rows [row_lo, row_hi].
void rotate_cols(DenseMatrix& h, Eigen::Index k, Eigen::Index row_lo, Eigen::Index row_hi,
                 const Givens& g) {
  const double c = g.c;
  const double sr = g.s.real();
  const double si = g.s.imag();
  double* x = reinterpret_cast<double*>(h.col(k).data() + row_lo);
  double* y = reinterpret_cast<double*>(h.col(k + 1).data() + row_lo);
  const Eigen::Index len = row_hi - row_lo + 1;
  for (Eigen::Index i = 0; i < 2 * len; i += 2) {
    const double ar = x[i], ai = x[i + 1], br = y[i], bi = y[i + 1];
    // a' = c a + conj(s) b,  b' = -s a + c b
    x[i] = c * ar + sr * br + si * bi;
    x[i + 1] = c * ai + sr * bi - si * br;
    y[i] = c * br - sr * ar + si * ai;
    y[i + 1] = c * bi - sr * ai - si * ar;
  }
}

// Single-shift QR on a small Hessenberg matrix. Eigenvalues go to w[offset + ...].
void small_qr(DenseMatrix h, std::vector<Complex>& w, std::size_t offset, std::size_t& sweeps,
              std::size_t sweep_cap) {
  constexpr int kExceptional = 10;
  constexpr double kExceptionalScale = 0.75;
  const auto out = [&](Eigen::Index k) -> Complex& { return w[offset + static_cast<std::size_t>(k)]; };

  int since_deflation = 0;
  Eigen::Index i = h.rows() - 1;
  while (i >= 0) {
    Eigen::Index l = i;
    while (l > 0 && !negligible_subdiagonal(h, l, 0, i)) --l;
    if (l > 0) h(l, l - 1) = 0.0;

    if (l == i) {
      out(i) = h(i, i);
      --i;
      since_deflation = 0;
      continue;
    }
    if (l == i - 1) {
      const Complex a = h(l, l), b = h(l, i), c = h(i, l), d = h(i, i);
      const Complex mid = 0.5 * (a + d);
      const Complex half = 0.5 * (a - d);
      const Complex root = std::sqrt(half * half + b * c);
      out(l) = mid + root;
      out(i) = mid - root;
      i -= 2;
      since_deflation = 0;
      continue;
    }

    if (++sweeps > sweep_cap) {
      throw ConvergenceFailure("Hessenberg QR did not converge within " +
                               std::to_string(sweep_cap) + " sweeps");
    }
    ++since_deflation;

    Complex shift;
    if (since_deflation % (2 * kExceptional) == 0) {
      shift = kExceptionalScale * std::abs(h(i, i - 1)) + h(i, i);
    } else if (since_deflation % kExceptional == 0) {
      shift = kExceptionalScale * std::abs(h(l + 1, l)) + h(l, l);
    } else {
      shift = wilkinson_shift(h(i - 1, i - 1), h(i - 1, i), h(i, i - 1), h(i, i));
    }

    Complex x = h(l, l) - shift;
    Complex y = h(l + 1, l);
    for (Eigen::Index k = l; k < i; ++k) {
      if (k > l) {
        x = h(k, k - 1);
        y = h(k + 1, k - 1);
      }
      const Givens g = make_givens(x, y);
      if (k > l) {
        h(k, k - 1) = g.r;
        h(k + 1, k - 1) = 0.0;
      }
      rotate_rows(h, k, k, i, g);
      rotate_cols(h, k, l, std::min(k + 2, i), g);
    }
  }
}

// Rotations of one chunk of a multi-bulge sweep. Each bulge contributes a
// wave: rotations on rows (r, r+1), (r+1, r+2), ... in application order.
struct RotationLog {
  struct Wave {
    Eigen::Index first_row;  // window-local
    std::size_t begin;       // index into c/sr/si
    std::size_t count;
  };
  std::vector<Wave> waves;  // waves[b] belongs to bulge b
  std::vector<double> c;
  std::vector<double> sr;
  std::vector<double> si;
  std::vector<std::size_t> bulge;  // bulge of each rotation, in application order

  void clear() {
    waves.clear();
    c.clear();
    sr.clear();
    si.clear();
    bulge.clear();
  }
  void push(std::size_t b, Eigen::Index r, const Givens& g) {
    if (waves.size() <= b) waves.resize(b + 1, Wave{-1, 0, 0});
    if (waves[b].count == 0) waves[b].first_row = r;
    ++waves[b].count;
    bulge.push_back(b);
    c.push_back(g.c);
    sr.push_back(g.s.real());
    si.push_back(g.s.imag());
  }
  std::size_t size() const { return c.size(); }

  // Regroups rotations wave by wave. Leading bulges run ahead of trailing ones
  // by more than one row, so a later rotation of a leading bulge never shares
  // a row with an earlier rotation of a trailing bulge and the two commute.
  void group() {
    std::vector<double> gc(size()), gsr(size()), gsi(size());
    std::size_t offset = 0;
    for (Wave& w : waves) {
      w.begin = offset;
      offset += w.count;
    }
    std::vector<std::size_t> fill(waves.size(), 0);
    for (std::size_t q = 0; q < size(); ++q) {
      const std::size_t b = bulge[q];
      const std::size_t dst = waves[b].begin + fill[b]++;
      gc[dst] = c[q];
      gsr[dst] = sr[q];
      gsi[dst] = si[q];
    }
    c.swap(gc);
    sr.swap(gsr);
    si.swap(gsi);
  }
};

// Eight doubles; lowered to whatever SIMD width the target offers.
using Lanes = double __attribute__((vector_size(64)));
constexpr Eigen::Index kLanes = 8;

inline Lanes load(const double* p) {
  Lanes v;
  std::memcpy(&v, p, sizeof v);
  return v;
}
inline void store(double* p, Lanes v) { std::memcpy(p, &v, sizeof v); }

// Applies one wave as row operations to a split-complex panel whose row r
// occupies re[r * ld, r * ld + ld), ld a multiple of kLanes. The row shared
// by consecutive rotations stays in registers. With `conj_s` the conjugate
// rotation is used, which turns a column rotation of a transposed block into
// the same row form.
void apply_wave(double* re, double* im, Eigen::Index ld, const RotationLog& log,
                const RotationLog::Wave& wave, bool conj_s) {
  const double sign = conj_s ? -1.0 : 1.0;
  const Eigen::Index r0 = wave.first_row;
  const auto len = static_cast<Eigen::Index>(wave.count);
  for (Eigen::Index j0 = 0; j0 < ld; j0 += kLanes) {
    Lanes xr = load(re + r0 * ld + j0);
    Lanes xi = load(im + r0 * ld + j0);
    for (Eigen::Index q = 0; q < len; ++q) {
      const std::size_t idx = wave.begin + static_cast<std::size_t>(q);
      const double c = log.c[idx];
      const double sr = log.sr[idx];
      const double si = sign * log.si[idx];
      double* row_r = re + (r0 + q) * ld + j0;
      double* row_i = im + (r0 + q) * ld + j0;
      const Lanes yr = load(row_r + ld);
      const Lanes yi = load(row_i + ld);
      store(row_r, c * xr + sr * yr - si * yi);
      store(row_i, c * xi + sr * yi + si * yr);
      const Lanes nr = c * yr - sr * xr - si * xi;
      const Lanes ni = c * yi - sr * xi + si * xr;
      xr = nr;
      xi = ni;
    }
    store(re + (r0 + len) * ld + j0, xr);
    store(im + (r0 + len) * ld + j0, xi);
  }
}

void apply_logged(double* re, double* im, Eigen::Index ld, const RotationLog& log, bool conj_s) {
  for (const RotationLog::Wave& w : log.waves) {
    if (w.count > 0) apply_wave(re, im, ld, log, w, conj_s);
  }
}

class MultiBulgeSweep {
 public:
  // Adjacent bulges are kept this many steps apart so their footprints never overlap.
  static constexpr Eigen::Index kGap = 2;
  // Time steps between flushes of the deferred far-block updates.
  static constexpr Eigen::Index kChunk = 24;

  explicit MultiBulgeSweep(DenseMatrix& h) : h_(h) {}

  // One QR sweep per shift over the active block [l, i], chased as a chain.
  void run(Eigen::Index l, Eigen::Index i, const std::vector<Complex>& shifts) {
    const auto m = static_cast<Eigen::Index>(shifts.size());
    const Eigen::Index total = (i - 1 - l) + kGap * (m - 1) + 1;
    const Eigen::Index chunk = kChunk;
    for (Eigen::Index t0 = 0; t0 < total; t0 += chunk) {
      const Eigen::Index t1 = std::min(total, t0 + chunk);
      const Eigen::Index kmin = std::max(l, l + t0 - kGap * (m - 1));
      const Eigen::Index kmax = std::min(i - 1, l + t1 - 1);
      const Eigen::Index w0 = kmin > l ? kmin - 1 : l;
      const Eigen::Index w1 = std::min(i, kmax + 2);
      log_.clear();
      for (Eigen::Index t = t0; t < t1; ++t) {
        for (Eigen::Index b = 0; b < m; ++b) {
          const Eigen::Index k = l + t - kGap * b;
          if (k < l || k > i - 1) continue;
          step(l, i, k, w0, w1, static_cast<std::size_t>(b), shifts[static_cast<std::size_t>(b)]);
        }
      }
      flush(l, i, w0, w1);
    }
  }

 private:
  void step(Eigen::Index l, Eigen::Index i, Eigen::Index k, Eigen::Index w0, Eigen::Index w1,
            std::size_t bulge, Complex shift) {
    Complex x;
    Complex y;
    if (k == l) {
      x = h_(l, l) - shift;
      y = h_(l + 1, l);
    } else {
      x = h_(k, k - 1);
      y = h_(k + 1, k - 1);
    }
    const Givens g = make_givens(x, y);
    if (k > l) {
      h_(k, k - 1) = g.r;
      h_(k + 1, k - 1) = 0.0;
    }
    rotate_rows(h_, k, k, w1, g);
    rotate_cols(h_, k, w0, std::min(k + 2, i), g);
    log_.push(bulge, k - w0, g);
  }

  // Applies the chunk's deferred rotations to H(w0:w1, w1+1:i) and H(l:w0-1, w0:w1).
  void flush(Eigen::Index l, Eigen::Index i, Eigen::Index w0, Eigen::Index w1) {
    if (log_.size() == 0) return;
    log_.group();
    const Eigen::Index ww = w1 - w0 + 1;

    const Eigen::Index right = i - w1;
    if (right > 0) {
      const Eigen::Index ld = padded(right);
      resize(ww * ld);
      for (Eigen::Index j = 0; j < right; ++j) {
        const Complex* col = h_.col(w1 + 1 + j).data() + w0;
        for (Eigen::Index r = 0; r < ww; ++r) {
          re_[static_cast<std::size_t>(r * ld + j)] = col[r].real();
          im_[static_cast<std::size_t>(r * ld + j)] = col[r].imag();
        }
      }
      apply_logged(re_.data(), im_.data(), ld, log_, false);
      for (Eigen::Index j = 0; j < right; ++j) {
        Complex* col = h_.col(w1 + 1 + j).data() + w0;
        for (Eigen::Index r = 0; r < ww; ++r) {
          col[r] = Complex(re_[static_cast<std::size_t>(r * ld + j)],
                           im_[static_cast<std::size_t>(r * ld + j)]);
        }
      }
    }

    const Eigen::Index top = w0 - l;
    if (top > 0) {
      const Eigen::Index ld = padded(top);
      resize(ww * ld);
      for (Eigen::Index r = 0; r < ww; ++r) {
        const Complex* col = h_.col(w0 + r).data() + l;
        double* pr = re_.data() + r * ld;
        double* pi = im_.data() + r * ld;
        for (Eigen::Index j = 0; j < top; ++j) {
          pr[j] = col[j].real();
          pi[j] = col[j].imag();
        }
      }
      apply_logged(re_.data(), im_.data(), ld, log_, true);
      for (Eigen::Index r = 0; r < ww; ++r) {
        Complex* col = h_.col(w0 + r).data() + l;
        const double* pr = re_.data() + r * ld;
        const double* pi = im_.data() + r * ld;
        for (Eigen::Index j = 0; j < top; ++j) col[j] = Complex(pr[j], pi[j]);
      }
    }
  }

  // Padding lanes hold stale but finite values; rotations keep them finite.
  static Eigen::Index padded(Eigen::Index n) { return (n + kLanes - 1) / kLanes * kLanes; }

  void resize(Eigen::Index size) {
    if (re_.size() < static_cast<std::size_t>(size)) {
      re_.resize(static_cast<std::size_t>(size));
      im_.resize(static_cast<std::size_t>(size));
    }
  }

  DenseMatrix& h_;
  RotationLog log_;
  std::vector<double> re_;
  std::vector<double> im_;
};

// Shifts per multi-bulge sweep. Measured on n <= 1024: more shifts widen the
// window that has to be updated with scalar rotations faster than they cut
// the number of sweeps.
constexpr Eigen::Index kShiftsPerSweep = 8;

}  // namespace

std::vector<Complex> hessenberg_eigenvalues(DenseMatrix h, std::size_t sweep_cap) {
  // Active blocks at or below this size go to the single-shift solver.
  constexpr Eigen::Index kSmallBlock = 64;
  constexpr int kExceptional = 6;
  constexpr double kExceptionalScale = 0.75;

  const Eigen::Index n = h.rows();
  std::vector<Complex> w(static_cast<std::size_t>(n));
  std::size_t sweeps = 0;
  int since_deflation = 0;
  MultiBulgeSweep sweep(h);
  std::vector<Complex> shifts;

  Eigen::Index i = n - 1;
  while (i >= 0) {
    Eigen::Index l = i;
    while (l > 0 && !negligible_subdiagonal(h, l, 0, i)) --l;
    if (l > 0) h(l, l - 1) = 0.0;

    const Eigen::Index size = i - l + 1;
    if (size <= kSmallBlock) {
      small_qr(h.block(l, l, size, size), w, static_cast<std::size_t>(l), sweeps, sweep_cap);
      i = l - 1;
      since_deflation = 0;
      continue;
    }

    if (++sweeps > sweep_cap) {
      throw ConvergenceFailure("Hessenberg QR did not converge within " +
                               std::to_string(sweep_cap) + " sweeps");
    }

    const Eigen::Index m = kShiftsPerSweep;
    shifts.assign(static_cast<std::size_t>(m), Complex(0.0));
    if (++since_deflation % kExceptional == 0) {
      for (Eigen::Index q = 0; q < m; ++q) {
        const Eigen::Index kk = i - q;
        const double s = std::abs(h(kk, kk - 1)) + std::abs(h(kk - 1, kk - 2));
        shifts[static_cast<std::size_t>(q)] = h(kk, kk) + kExceptionalScale * s;
      }
    } else {
      std::size_t inner = 0;
      small_qr(h.block(i - m + 1, i - m + 1, m, m), shifts, 0, inner, kSweepsPerDim * m);
    }

    const Eigen::Index before = i;
    sweep.run(l, i, shifts);
    // Progress is judged by deflation at the bottom of the block.
    if (negligible_subdiagonal(h, before, l, before)) since_deflation = 0;
  }
  return w;
}

}  // namespace detail

Spectrum eigvals_general(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 1) return Spectrum{{a(0, 0)}, SpectrumKind::general_complex};
  detail::Hessenberg hess = detail::reduce_to_hessenberg(a.dense());
  std::vector<Complex> values = detail::hessenberg_eigenvalues(
      detail::hessenberg_h(hess), kSweepsPerDim * n);
  return Spectrum{std::move(values), SpectrumKind::general_complex};
}

}  // namespace qfid
