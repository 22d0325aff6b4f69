#pragma once

#include <array>
#include <span>
#include <vector>

#include "meandim/core.hpp"
#include "meandim/elliptic/lattice.hpp"
#include "meandim/elliptic/weierstrass.hpp"
#include "meandim/numerics/quadrature.hpp"

namespace meandim {

/// f(z) or, in the pole chart, g = 1/f; derivative likewise.
struct CurveValue {
  Complex value;
  Complex derivative;
  bool pole_chart = false;
};

/// Residuals of the checks run at construction.
struct CurveValidation {
  double critical_value_e1 = 0.0;  // |f(0) - e1|
  double critical_value_e2 = 0.0;  // |f(omega2) - e2|
  double pole_at_omega1 = 0.0;     // |1/f(omega1)|
  double half_period = 0.0;        // |p(omega1) - (g3/4)^(1/3)|
  double max_ode_residual = 0.0;   // max |f'^2 - K(f^3 - 1/sqrt8)| / (1+|f|^3) on samples

  double worst() const noexcept;
};

/// The equianharmonic elliptic Brody curve: f = (4/K) p(z - omega1) with
/// g2 = 0, g3 = K^3/(16 sqrt8), K = pi sqrt8, on the hexagonal lattice
/// Z(2 omega1) + Z(2 omega2), omega2 = omega1 e^{i pi/3}. It solves
/// f'^2 = K (f^3 - 1/sqrt8), maps 0, omega1, omega2 to e1, infinity, e2,
/// and has sup |df| = 1.
class ExtremalBrodyCurve {
 public:
  static constexpr double kChartSwitch = 1e3;  // |f| above this uses g = 1/f
  static constexpr double kValidationTolerance = 1e-6;

  /// Computes omega1 from the elliptic integral int_1^inf dx/sqrt(x^3-1),
  /// then validates; throws Error if a residual exceeds 1e-6.
  static ExtremalBrodyCurve build(const numerics::QuadratureConfig& cfg);

  double K() const noexcept { return k_; }
  double omega1() const noexcept { return omega1_; }
  Complex omega2() const noexcept { return omega2_; }
  double elliptic_integral() const noexcept { return integral_; }
  const Lattice& lattice() const noexcept { return wp_.lattice(); }
  const WeierstrassP& wp() const noexcept { return wp_; }
  const std::array<Complex, 3>& critical_values() const noexcept { return critical_values_; }
  const CurveValidation& validation() const noexcept { return validation_; }

  CurveValue eval(Complex z) const;

  /// |df| = |f'| / (sqrt(pi) (1 + |f|^2)), chart-invariant.
  double spherical_derivative(Complex z) const;

  /// |df| from the ODE form sqrt((K/pi) |f^3 - 1/sqrt8|) / (1 + |f|^2).
  double spherical_derivative_ode_form(Complex z) const;

  /// |df|^2 at a batch of points through the SIMD kernel.
  void energy_density(std::span<const Complex> z, std::span<double> out) const;

  /// Offset of z - omega1 from the nearest pole.
  Complex pole_offset(Complex z) const noexcept { return wp_.offset(z - omega1_); }

 private:
  ExtremalBrodyCurve(double k, double integral, double omega1, WeierstrassP wp);

  double k_;
  double integral_;
  double omega1_;
  Complex omega2_;
  WeierstrassP wp_;
  double alpha_;  // 4/K
  std::array<Complex, 3> critical_values_;
  std::vector<double> kernel_coeffs_;
  double kernel_radius_;
  CurveValidation validation_;
};

/// Value of int_1^inf dx / sqrt(x^3 - 1).
double cubic_elliptic_integral(const numerics::QuadratureConfig& cfg);

ExtremalBrodyCurve build_extremal_curve(const numerics::QuadratureConfig& cfg);
CurveValue curve_eval(const ExtremalBrodyCurve& curve, Complex z);
double spherical_derivative(const ExtremalBrodyCurve& curve, Complex z);

}  // namespace meandim
