#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "meandim/core.hpp"
#include "meandim/numerics/quadrature.hpp"

namespace meandim::helmholtz {

/// (-Laplace + c) u = g on the square [-R, R]^2 with Dirichlet data, 5-point
/// stencil on spacing h.
struct GridProblem {
  double R = 1.0;
  double h = 0.1;
  double c = 1.0;
  numerics::ScalarField rhs = [](Complex) { return 0.0; };
  numerics::ScalarField boundary = [](Complex) { return 0.0; };

  /// Throws InvalidArgument unless h > 0, c > 0, R/h is an integer >= 1.
  void validate() const;

  /// Grid points per axis, 2R/h + 1.
  std::size_t points_per_axis() const;
};

/// Row-major samples on the problem grid: value(i, j) sits at (x_j, y_i).
struct GridFunction {
  double R = 0.0;
  double h = 0.0;
  std::size_t n = 0;
  std::vector<double> values;

  double x(std::size_t j) const noexcept { return -R + h * static_cast<double>(j); }
  double y(std::size_t i) const noexcept { return -R + h * static_cast<double>(i); }
  double& at(std::size_t i, std::size_t j) { return values[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
  bool interior(std::size_t i, std::size_t j) const noexcept {
    return i > 0 && j > 0 && i + 1 < n && j + 1 < n;
  }
};

GridFunction sample(const GridProblem& p, const numerics::ScalarField& f);

struct SolveStats {
  int iterations = 0;
  double residual = 0.0;  // max |g - (-Laplace_h + c) u| over interior points
};

inline constexpr double kSolveTolerance = 1e-10;

/// Conjugate gradients on the symmetric positive definite interior system,
/// starting from 0, until the max-norm residual is <= 1e-10. Throws
/// ConvergenceError with the last residual otherwise.
GridFunction barrier_solve(const GridProblem& p, SolveStats* stats = nullptr);

/// Max-norm residual of the discrete equation for u.
double discrete_residual(const GridProblem& p, const GridFunction& u);

struct MaxPrincipleCheck {
  bool ok = false;
  double sup_u = 0.0;  // interior sup |u|
  double bound = 0.0;  // sup|g|/c + 1e-8 + max boundary magnitude
  std::optional<Complex> witness;  // worst violating point
};

/// ok iff interior sup|u| <= sup|g|/c + 1e-8 + max|boundary|.
MaxPrincipleCheck max_principle_check(const GridProblem& p, const GridFunction& u);

/// Pointwise barrier sup|g|/c + B w_mu(z) / min_boundary w_mu with
/// B = max|boundary| and mu = (acosh(1 + c h^2/2) / h)^2, chosen so that
/// w_mu is a supersolution of the discrete operator. |u| <= barrier holds
/// for the discrete solution by the discrete maximum principle.
GridFunction barrier_bound(const GridProblem& p, const numerics::QuadratureConfig& cfg = {});

}  // namespace meandim::helmholtz
