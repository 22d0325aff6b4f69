#include "meandim/helmholtz/w_lambda.hpp"

#include <cmath>

namespace meandim::helmholtz {

void HelmholtzSolution::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("lambda must be > 0");
}

double w_eval(const HelmholtzSolution& sol, Complex z, const numerics::QuadratureConfig& cfg) {
  sol.validate();
  const double k = std::sqrt(sol.lambda);
  const double x = z.real();
  const double y = z.imag();
  const numerics::BatchFunction integrand = [&](std::span<const double> t, std::span<double> out) {
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = std::exp(k * (x * std::cos(t[i]) + y * std::sin(t[i])));
  };
  return numerics::periodic_mean(integrand, cfg);
}

double helmholtz_residual(const numerics::ScalarField& f, double lambda, Complex z, double h) {
  if (!(h > 0.0)) throw InvalidArgument("stencil spacing h must be > 0");
  const double center = f(z);
  const double lap = f(z + h) + f(z - h) + f(z + Complex(0.0, h)) + f(z - Complex(0.0, h)) -
                     4.0 * center;
  return -lap / (h * h) + lambda * center;
}

double helmholtz_residual(const HelmholtzSolution& sol, Complex z, double h,
                          const numerics::QuadratureConfig& cfg) {
  sol.validate();
  return helmholtz_residual([&](Complex p) { return w_eval(sol, p, cfg); }, sol.lambda, z, h);
}

}  // namespace meandim::helmholtz
