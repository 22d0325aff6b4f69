// Compiled with -mavx2 -mfma; only reached when the CPU reports both.

#include <immintrin.h>

#include <cmath>
#include <numbers>

#include "meandim/simd/kernels.hpp"

namespace meandim::simd::avx2 {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

}  // namespace

void energy_density(std::span<const double> w_re, std::span<const double> w_im,
                    std::span<double> out, const EnergyKernelParams& params) {
  const std::size_t count = out.size();
  const std::span<const double> c = params.laurent;
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d minus_two = _mm256_set1_pd(-2.0);
  const __m256d a2 = _mm256_set1_pd(params.alpha_squared);
  const __m256d scale = _mm256_set1_pd(params.alpha_squared * std::numbers::inv_pi);

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d x = _mm256_loadu_pd(w_re.data() + i);
    const __m256d y = _mm256_loadu_pd(w_im.data() + i);
    const __m256d vr = _mm256_fmsub_pd(x, x, _mm256_mul_pd(y, y));
    const __m256d vi = _mm256_mul_pd(two, _mm256_mul_pd(x, y));

    __m256d sr = _mm256_setzero_pd(), si = _mm256_setzero_pd();
    __m256d tr = _mm256_setzero_pd(), ti = _mm256_setzero_pd();
    for (std::size_t j = c.size(); j-- > 0;) {
      const __m256d cj = _mm256_set1_pd(c[j]);
      const __m256d kcj = _mm256_set1_pd(static_cast<double>(j + 1) * c[j]);
      const __m256d nsr = _mm256_add_pd(_mm256_fmsub_pd(sr, vr, _mm256_mul_pd(si, vi)), cj);
      const __m256d nsi = _mm256_fmadd_pd(sr, vi, _mm256_mul_pd(si, vr));
      const __m256d ntr = _mm256_add_pd(_mm256_fmsub_pd(tr, vr, _mm256_mul_pd(ti, vi)), kcj);
      const __m256d nti = _mm256_fmadd_pd(tr, vi, _mm256_mul_pd(ti, vr));
      sr = nsr;
      si = nsi;
      tr = ntr;
      ti = nti;
    }
    const __m256d v2r = _mm256_fmsub_pd(vr, vr, _mm256_mul_pd(vi, vi));
    const __m256d v2i = _mm256_mul_pd(two, _mm256_mul_pd(vr, vi));
    const __m256d nr = _mm256_add_pd(one, _mm256_fmsub_pd(v2r, sr, _mm256_mul_pd(v2i, si)));
    const __m256d ni = _mm256_fmadd_pd(v2r, si, _mm256_mul_pd(v2i, sr));
    const __m256d dr =
        _mm256_fmadd_pd(two, _mm256_fmsub_pd(v2r, tr, _mm256_mul_pd(v2i, ti)), minus_two);
    const __m256d di = _mm256_mul_pd(two, _mm256_fmadd_pd(v2r, ti, _mm256_mul_pd(v2i, tr)));

    const __m256d w2 = _mm256_fmadd_pd(x, x, _mm256_mul_pd(y, y));
    const __m256d nn = _mm256_fmadd_pd(nr, nr, _mm256_mul_pd(ni, ni));
    const __m256d den = _mm256_fmadd_pd(a2, nn, _mm256_mul_pd(w2, w2));
    const __m256d dd = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
    const __m256d num = _mm256_mul_pd(scale, _mm256_mul_pd(dd, w2));
    _mm256_storeu_pd(out.data() + i, _mm256_div_pd(num, _mm256_mul_pd(den, den)));
  }
  if (i < count) {
    scalar::energy_density(w_re.subspan(i), w_im.subspan(i), out.subspan(i), params);
  }
}

void helmholtz_apply(const StencilArgs& args) {
  const std::size_t n = args.n;
  const double* u = args.u.data();
  double* out = args.out.data();
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d inv_h2 = _mm256_set1_pd(args.inv_h2);
  const __m256d c = _mm256_set1_pd(args.c);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::size_t row = i * n;
    std::size_t j = 1;
    for (; j + 4 < n; j += 4) {
      const std::size_t k = row + j;
      const __m256d centre = _mm256_loadu_pd(u + k);
      __m256d nb = _mm256_add_pd(_mm256_loadu_pd(u + k - 1), _mm256_loadu_pd(u + k + 1));
      nb = _mm256_add_pd(nb, _mm256_loadu_pd(u + k - n));
      nb = _mm256_add_pd(nb, _mm256_loadu_pd(u + k + n));
      const __m256d lap = _mm256_fmsub_pd(four, centre, nb);
      _mm256_storeu_pd(out + k, _mm256_fmadd_pd(lap, inv_h2, _mm256_mul_pd(c, centre)));
    }
    for (; j + 1 < n; ++j) {
      const std::size_t k = row + j;
      const double lap = 4.0 * u[k] - u[k - 1] - u[k + 1] - u[k - n] - u[k + n];
      out[k] = lap * args.inv_h2 + args.c * u[k];
    }
  }
}

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i + 4),
                           _mm256_loadu_pd(y.data() + i + 4), acc1);
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_fmadd_pd(a, _mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i));
    _mm256_storeu_pd(y.data() + i, r);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs(std::span<const double> x) {
  const std::size_t n = x.size();
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) m = _mm256_max_pd(m, abs_pd(_mm256_loadu_pd(x.data() + i)));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double r = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) r = std::fmax(r, std::fabs(x[i]));
  return r;
}

}  // namespace meandim::simd::avx2
