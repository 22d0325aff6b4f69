#include <cmath>
#include <numbers>

#include "meandim/simd/kernels.hpp"

namespace meandim::simd::scalar {

void energy_density(std::span<const double> w_re, std::span<const double> w_im,
                    std::span<double> out, const EnergyKernelParams& params) {
  const std::size_t count = out.size();
  const std::span<const double> c = params.laurent;
  const double a2 = params.alpha_squared;
  for (std::size_t i = 0; i < count; ++i) {
    const double x = w_re[i];
    const double y = w_im[i];
    const double vr = x * x - y * y;  // v = w^2
    const double vi = 2.0 * x * y;

    // S(v) = sum_k c_k v^(k-2)  and  T(v) = sum_k (k-1) c_k v^(k-2),
    // so that N = 1 + v^2 S and D = -2 + 2 v^2 T.
    double sr = 0.0, si = 0.0, tr = 0.0, ti = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) {
      const double k_minus_1 = static_cast<double>(j + 1);
      const double nsr = sr * vr - si * vi + c[j];
      const double nsi = sr * vi + si * vr;
      const double ntr = tr * vr - ti * vi + k_minus_1 * c[j];
      const double nti = tr * vi + ti * vr;
      sr = nsr;
      si = nsi;
      tr = ntr;
      ti = nti;
    }
    const double v2r = vr * vr - vi * vi;
    const double v2i = 2.0 * vr * vi;
    const double nr = 1.0 + (v2r * sr - v2i * si);
    const double ni = v2r * si + v2i * sr;
    const double dr = -2.0 + 2.0 * (v2r * tr - v2i * ti);
    const double di = 2.0 * (v2r * ti + v2i * tr);

    const double w2 = x * x + y * y;
    const double den = w2 * w2 + a2 * (nr * nr + ni * ni);
    out[i] = a2 * std::numbers::inv_pi * (dr * dr + di * di) * w2 / (den * den);
  }
}

void helmholtz_apply(const StencilArgs& args) {
  const std::size_t n = args.n;
  const double* u = args.u.data();
  double* out = args.out.data();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::size_t row = i * n;
    for (std::size_t j = 1; j + 1 < n; ++j) {
      const std::size_t k = row + j;
      const double lap = 4.0 * u[k] - u[k - 1] - u[k + 1] - u[k - n] - u[k + n];
      out[k] = lap * args.inv_h2 + args.c * u[k];
    }
  }
}

double dot(std::span<const double> x, std::span<const double> y) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
  return sum;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::fmax(m, std::fabs(v));
  return m;
}

}  // namespace meandim::simd::scalar
