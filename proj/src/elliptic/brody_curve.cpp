#include "meandim/elliptic/brody_curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "meandim/simd/kernels.hpp"

namespace meandim {
namespace {

const double kSqrt8 = std::sqrt(8.0);
const double kCubicConstant = 1.0 / kSqrt8;  // f'^2 = K (f^3 - 1/sqrt8)

Complex rotate(double angle) { return std::polar(1.0, angle); }

}  // namespace

double CurveValidation::worst() const noexcept {
  return std::max({critical_value_e1, critical_value_e2, pole_at_omega1, half_period,
                   max_ode_residual});
}

double cubic_elliptic_integral(const numerics::QuadratureConfig& cfg) {
  numerics::QuadratureConfig local = cfg;
  local.singularity_substitution = numerics::Singularity::algebraic_endpoint;
  const numerics::ScalarFunction integrand = [](double x) {
    return 1.0 / std::sqrt((x - 1.0) * (x * x + x + 1.0));
  };
  return numerics::integrate_1d(integrand, 1.0, std::numeric_limits<double>::infinity(), local);
}

ExtremalBrodyCurve::ExtremalBrodyCurve(double k, double integral, double omega1, WeierstrassP wp)
    : k_(k),
      integral_(integral),
      omega1_(omega1),
      omega2_(omega1 * rotate(std::numbers::pi / 3.0)),
      wp_(std::move(wp)),
      alpha_(4.0 / k) {
  const double r = 1.0 / std::numbers::sqrt2;
  critical_values_ = {Complex(r, 0.0), r * rotate(2.0 * std::numbers::pi / 3.0),
                      r * rotate(4.0 * std::numbers::pi / 3.0)};
  for (const Complex& c : wp_.laurent()) kernel_coeffs_.push_back(c.real());
  kernel_radius_ = 0.6 * wp_.lattice().shortest_vector();
}

ExtremalBrodyCurve ExtremalBrodyCurve::build(const numerics::QuadratureConfig& cfg) {
  const double k = std::numbers::pi * kSqrt8;
  const double integral = cubic_elliptic_integral(cfg);
  const double omega1 = std::pow(2.0, 0.25) / std::sqrt(k) * integral;
  const Lattice lattice(Complex(2.0 * omega1, 0.0), 2.0 * omega1 * rotate(std::numbers::pi / 3.0));
  const double g3 = k * k * k / (16.0 * kSqrt8);
  ExtremalBrodyCurve curve(k, integral, omega1, WeierstrassP(lattice, 0.0, g3));

  CurveValidation& v = curve.validation_;
  v.critical_value_e1 = std::abs(curve.eval(0.0).value - curve.critical_values_[0]);
  v.critical_value_e2 = std::abs(curve.eval(curve.omega2_).value - curve.critical_values_[1]);
  const CurveValue at_pole = curve.eval(omega1);
  v.pole_at_omega1 = at_pole.pole_chart ? std::abs(at_pole.value) : 1.0;
  v.half_period = std::abs(curve.wp_.eval(omega1).p - std::cbrt(g3 / 4.0));

  // ODE residual on an 8 x 8 grid of the fundamental domain, off the poles.
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Complex z = (i + 0.37) / 8.0 * lattice.a() + (j + 0.61) / 8.0 * lattice.b();
      const CurveValue f = curve.eval(z);
      if (f.pole_chart) continue;
      const Complex rhs = k * (f.value * f.value * f.value - kCubicConstant);
      const double scale = 1.0 + std::pow(std::abs(f.value), 3);
      v.max_ode_residual =
          std::max(v.max_ode_residual, std::abs(f.derivative * f.derivative - rhs) / scale);
    }
  }
  if (!(v.worst() <= kValidationTolerance)) {
    throw Error("extremal curve validation failed (worst residual " + std::to_string(v.worst()) +
                ")");
  }
  return curve;
}

CurveValue ExtremalBrodyCurve::eval(Complex z) const {
  const Complex w = pole_offset(z);
  if (std::abs(w) < 0.25 * wp_.lattice().shortest_vector()) {
    const WeierstrassValue rec = wp_.reciprocal_offset(w);
    const Complex g = rec.p / alpha_;
    if (std::abs(g) < 1.0 / kChartSwitch) return {g, rec.dp / alpha_, true};
  }
  const WeierstrassValue val = wp_.eval_offset(w);
  return {alpha_ * val.p, alpha_ * val.dp, false};
}

double ExtremalBrodyCurve::spherical_derivative(Complex z) const {
  const CurveValue f = eval(z);
  return std::abs(f.derivative) / (std::sqrt(std::numbers::pi) * (1.0 + std::norm(f.value)));
}

double ExtremalBrodyCurve::spherical_derivative_ode_form(Complex z) const {
  const CurveValue f = eval(z);
  const Complex& u = f.value;
  // In the pole chart |f^3 - c| / (1+|f|^2)^2 = |g| |1 - c g^3| / (1+|g|^2)^2.
  const double numerator = f.pole_chart ? std::abs(u) * std::abs(1.0 - kCubicConstant * u * u * u)
                                        : std::abs(u * u * u - kCubicConstant);
  return std::sqrt(k_ / std::numbers::pi * numerator) / (1.0 + std::norm(u));
}

void ExtremalBrodyCurve::energy_density(std::span<const Complex> z, std::span<double> out) const {
  thread_local std::vector<double> re, im;
  re.resize(z.size());
  im.resize(z.size());
  bool inside = true;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Complex w = pole_offset(z[i]);
    re[i] = w.real();
    im[i] = w.imag();
    inside = inside && std::abs(w) <= kernel_radius_;
  }
  if (inside) {
    simd::energy_density(re, im, out, {kernel_coeffs_, alpha_ * alpha_});
    return;
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double d = spherical_derivative(z[i]);
    out[i] = d * d;
  }
}

ExtremalBrodyCurve build_extremal_curve(const numerics::QuadratureConfig& cfg) {
  return ExtremalBrodyCurve::build(cfg);
}

CurveValue curve_eval(const ExtremalBrodyCurve& curve, Complex z) { return curve.eval(z); }

double spherical_derivative(const ExtremalBrodyCurve& curve, Complex z) {
  return curve.spherical_derivative(z);
}

}  // namespace meandim
