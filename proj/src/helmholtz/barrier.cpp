#include "meandim/helmholtz/barrier.hpp"

#include <algorithm>
#include <cmath>

#include "meandim/helmholtz/w_lambda.hpp"
#include "meandim/simd/kernels.hpp"

namespace meandim::helmholtz {

void GridProblem::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("grid spacing h must be > 0");
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("coefficient c must be > 0");
  if (!(R > 0.0) || !std::isfinite(R)) throw InvalidArgument("half-width R must be > 0");
  const double steps = R / h;
  if (std::fabs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps) || std::round(steps) < 1.0) {
    throw InvalidArgument("R / h must be a positive integer");
  }
  if (!rhs || !boundary) throw InvalidArgument("rhs and boundary functions are required");
}

std::size_t GridProblem::points_per_axis() const {
  return 2 * static_cast<std::size_t>(std::llround(R / h)) + 1;
}

GridFunction sample(const GridProblem& p, const numerics::ScalarField& f) {
  p.validate();
  GridFunction out{p.R, p.h, p.points_per_axis(), {}};
  out.values.resize(out.n * out.n);
  for (std::size_t i = 0; i < out.n; ++i) {
    for (std::size_t j = 0; j < out.n; ++j) out.at(i, j) = f(Complex(out.x(j), out.y(i)));
  }
  return out;
}

namespace {

// Interior rhs minus the stencil's boundary contribution; boundary entries 0.
std::vector<double> interior_rhs(const GridProblem& p, const GridFunction& g, const GridFunction& ub) {
  const std::size_t n = ub.n;
  std::vector<double> applied(n * n, 0.0);
  simd::helmholtz_apply({ub.values, applied, n, 1.0 / (p.h * p.h), p.c});
  std::vector<double> b(n * n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = 1; j + 1 < n; ++j) b[i * n + j] = g.at(i, j) - applied[i * n + j];
  }
  return b;
}

GridFunction boundary_only(const GridProblem& p) {
  GridFunction ub = sample(p, p.boundary);
  for (std::size_t i = 1; i + 1 < ub.n; ++i) {
    for (std::size_t j = 1; j + 1 < ub.n; ++j) ub.at(i, j) = 0.0;
  }
  return ub;
}

}  // namespace

double discrete_residual(const GridProblem& p, const GridFunction& u) {
  p.validate();
  const GridFunction g = sample(p, p.rhs);
  std::vector<double> applied(u.n * u.n, 0.0);
  simd::helmholtz_apply({u.values, applied, u.n, 1.0 / (p.h * p.h), p.c});
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < u.n; ++i) {
    for (std::size_t j = 1; j + 1 < u.n; ++j) {
      worst = std::max(worst, std::fabs(g.at(i, j) - applied[i * u.n + j]));
    }
  }
  return worst;
}

GridFunction barrier_solve(const GridProblem& p, SolveStats* stats) {
  p.validate();
  const GridFunction g = sample(p, p.rhs);
  GridFunction u = boundary_only(p);
  const std::size_t n = u.n;
  const std::size_t size = n * n;
  const simd::StencilArgs base{{}, {}, n, 1.0 / (p.h * p.h), p.c};

  // u = boundary part + v, v = 0 on the boundary; CG on A v = b.
  std::vector<double> v(size, 0.0);
  std::vector<double> r = interior_rhs(p, g, u);
  std::vector<double> d = r;
  std::vector<double> q(size, 0.0);
  double rr = simd::dot(r, r);
  double residual = simd::max_abs(r);
  const int max_iterations = static_cast<int>(std::min<std::size_t>(size * 4, 1000000)) + 100;
  constexpr int kRefresh = 50;
  int it = 0;
  // Aim below the target so the recomputed residual clears it with margin.
  while (residual > 0.25 * kSolveTolerance && it < max_iterations) {
    simd::helmholtz_apply({d, q, base.n, base.inv_h2, base.c});
    const double alpha = rr / simd::dot(d, q);
    simd::axpy(alpha, d, v);
    ++it;
    if (it % kRefresh == 0) {
      // Replace the recurrence by the true residual to stop drift.
      std::vector<double> av(size, 0.0);
      simd::helmholtz_apply({v, av, base.n, base.inv_h2, base.c});
      const std::vector<double> b = interior_rhs(p, g, u);
      for (std::size_t k = 0; k < size; ++k) r[k] = b[k] - av[k];
    } else {
      simd::axpy(-alpha, q, r);
    }
    const double rr_next = simd::dot(r, r);
    residual = simd::max_abs(r);
    const double beta = rr_next / rr;
    rr = rr_next;
    for (std::size_t k = 0; k < size; ++k) d[k] = r[k] + beta * d[k];
  }
  for (std::size_t k = 0; k < size; ++k) u.values[k] += v[k];
  const double final_residual = discrete_residual(p, u);
  if (stats) *stats = {it, final_residual};
  if (!(final_residual <= kSolveTolerance)) {
    throw ConvergenceError("conjugate gradients stopped above the residual target",
                           final_residual);
  }
  return u;
}

MaxPrincipleCheck max_principle_check(const GridProblem& p, const GridFunction& u) {
  p.validate();
  const GridFunction g = sample(p, p.rhs);
  double sup_g = 0.0;
  double sup_boundary = 0.0;
  for (std::size_t i = 0; i < u.n; ++i) {
    for (std::size_t j = 0; j < u.n; ++j) {
      if (u.interior(i, j)) {
        sup_g = std::max(sup_g, std::fabs(g.at(i, j)));
      } else {
        sup_boundary = std::max(sup_boundary, std::fabs(u.at(i, j)));
      }
    }
  }
  MaxPrincipleCheck out;
  out.bound = sup_g / p.c + 1e-8 + sup_boundary;
  double worst_excess = 0.0;
  for (std::size_t i = 1; i + 1 < u.n; ++i) {
    for (std::size_t j = 1; j + 1 < u.n; ++j) {
      const double a = std::fabs(u.at(i, j));
      out.sup_u = std::max(out.sup_u, a);
      if (a - out.bound > worst_excess) {
        worst_excess = a - out.bound;
        out.witness = Complex(u.x(j), u.y(i));
      }
    }
  }
  out.ok = !out.witness.has_value();
  return out;
}

GridFunction barrier_bound(const GridProblem& p, const numerics::QuadratureConfig& cfg) {
  p.validate();
  const GridFunction g = sample(p, p.rhs);
  const GridFunction b = sample(p, p.boundary);
  double sup_g = 0.0;
  double sup_boundary = 0.0;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) {
      if (g.interior(i, j)) {
        sup_g = std::max(sup_g, std::fabs(g.at(i, j)));
      } else {
        sup_boundary = std::max(sup_boundary, std::fabs(b.at(i, j)));
      }
    }
  }
  const double kappa = std::acosh(1.0 + 0.5 * p.c * p.h * p.h) / p.h;
  const HelmholtzSolution barrier{kappa * kappa};
  GridFunction w = sample(p, [&](Complex z) { return w_eval(barrier, z, cfg); });
  double w_min = w.at(0, 0);
  for (std::size_t i = 0; i < w.n; ++i) {
    for (std::size_t j = 0; j < w.n; ++j) {
      if (!w.interior(i, j)) w_min = std::min(w_min, w.at(i, j));
    }
  }
  for (double& x : w.values) x = sup_g / p.c + sup_boundary * x / w_min;
  return w;
}

}  // namespace meandim::helmholtz
