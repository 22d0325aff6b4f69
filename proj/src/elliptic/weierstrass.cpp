#include "meandim/elliptic/weierstrass.hpp"

#include <cmath>

namespace meandim {

WeierstrassP::WeierstrassP(Lattice lattice, Complex g2, Complex g3, int series_order,
                           double reduction_radius)
    : lattice_(lattice), g2_(g2), g3_(g3) {
  if (series_order < 10) throw InvalidArgument("series_order must be >= 10");
  const double shortest = lattice_.shortest_vector();
  reduction_radius_ = reduction_radius > 0.0 ? reduction_radius : 0.5 * shortest;
  if (reduction_radius_ >= shortest) {
    throw InvalidArgument("reduction_radius must lie inside the Laurent disk");
  }
  pole_guard_ = 1e-6 * shortest;

  // c_2 = g2/20, c_3 = g3/28,
  // c_k = 3/((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m}   (k >= 4).
  const int order = series_order;
  std::vector<Complex> c(order + 1);
  c[2] = g2 / 20.0;
  c[3] = g3 / 28.0;
  for (int k = 4; k <= order; ++k) {
    Complex sum{};
    for (int m = 2; m <= k - 2; ++m) sum += c[m] * c[k - m];
    c[k] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * sum;
  }
  coeffs_.assign(c.begin() + 2, c.end());
}

WeierstrassValue WeierstrassP::series(Complex w) const noexcept {
  // S(v) = sum c_k v^(k-1), S'(w) = 2w * sum (k-1) c_k v^(k-2), v = w^2.
  const Complex v = w * w;
  Complex s{}, t{};
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const double k_minus_1 = static_cast<double>(j + 1);
    s = s * v + coeffs_[j];
    t = t * v + k_minus_1 * coeffs_[j];
  }
  s *= v;
  const Complex p = 1.0 / v + s;
  const Complex dp = -2.0 / (v * w) + 2.0 * w * t;
  return {p, dp};
}

WeierstrassValue WeierstrassP::eval_offset(Complex w) const {
  if (std::abs(w) < pole_guard_) {
    throw PoleError("Weierstrass p evaluated within pole_guard of a lattice point");
  }
  int halvings = 0;
  Complex u = w;
  while (std::abs(u) > reduction_radius_) {
    u *= 0.5;
    ++halvings;
  }
  WeierstrassValue val = series(u);
  for (int i = 0; i < halvings; ++i) {
    const Complex p = val.p;
    const Complex d = val.dp;
    const Complex dd = 6.0 * p * p - 0.5 * g2_;  // p''
    const Complex ratio = dd / d;
    val.p = -2.0 * p + 0.25 * ratio * ratio;
    val.dp = -d + 3.0 * dd * p / d - 0.25 * ratio * ratio * ratio;
  }
  return val;
}

WeierstrassValue WeierstrassP::eval(Complex z) const { return eval_offset(offset(z)); }

WeierstrassValue WeierstrassP::reciprocal_offset(Complex w) const {
  // With p = (1 + v S)/v:  1/p = v/(1 + v S),  (1/p)' = (2w - w^4 S')/(1 + v S)^2.
  const Complex v = w * w;
  Complex s{}, t{};
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const double k_minus_1 = static_cast<double>(j + 1);
    s = s * v + coeffs_[j];
    t = t * v + k_minus_1 * coeffs_[j];
  }
  s *= v;
  const Complex ds = 2.0 * w * t;  // S'(w) where p = 1/v + S
  const Complex den = 1.0 + v * s;
  return {v / den, (2.0 * w - v * v * ds) / (den * den)};
}

double WeierstrassP::ode_residual(Complex z) const {
  const WeierstrassValue val = eval(z);
  const Complex rhs = 4.0 * val.p * val.p * val.p - g2_ * val.p - g3_;
  const double scale = 1.0 + std::pow(std::abs(val.p), 3);
  return std::abs(val.dp * val.dp - rhs) / scale;
}

WeierstrassValue wp_eval(const WeierstrassP& wp, Complex z) { return wp.eval(z); }

}  // namespace meandim
