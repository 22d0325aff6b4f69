#pragma once

#include "meandim/core.hpp"
#include "meandim/numerics/quadrature.hpp"

namespace meandim::helmholtz {

/// w(z) = (1/2pi) int_0^{2pi} exp(sqrt(lambda) (x cos t + y sin t)) dt,
/// a radial solution of (-Laplace + lambda) w = 0 with minimum w(0) = 1.
struct HelmholtzSolution {
  double lambda = 1.0;

  void validate() const;
};

/// Periodic trapezoid rule on the angular average.
double w_eval(const HelmholtzSolution& sol, Complex z, const numerics::QuadratureConfig& cfg = {});

/// 5-point value of (-Laplace_h + lambda) f at z.
double helmholtz_residual(const numerics::ScalarField& f, double lambda, Complex z, double h);

/// helmholtz_residual applied to w itself; O(h^2).
double helmholtz_residual(const HelmholtzSolution& sol, Complex z, double h,
                          const numerics::QuadratureConfig& cfg = {});

}  // namespace meandim::helmholtz
