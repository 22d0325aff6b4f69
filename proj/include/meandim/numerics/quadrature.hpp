#pragma once

#include <functional>
#include <span>

#include "meandim/core.hpp"

namespace meandim {
class Lattice;
}

namespace meandim::numerics {

enum class Singularity {
  none,
  /// Inverse-square-root type singularity at the left endpoint; handled by
  /// x = a + t^2. Infinite upper limits are handled with or without it.
  algebraic_endpoint,
};

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
  Singularity singularity_substitution = Singularity::none;

  /// Throws InvalidArgument unless tolerances > 0 and max_subdivisions >= 1.
  void validate() const;

  double target(double value) const noexcept;
};

/// Integrand evaluated on a batch of abscissae (one call per panel).
using BatchFunction = std::function<void(std::span<const double> x, std::span<double> out)>;
using ScalarFunction = std::function<double(double)>;

/// Integrand in the plane, evaluated on a batch of points.
using FieldFunction = std::function<void(std::span<const Complex> z, std::span<double> out)>;
using ScalarField = std::function<double(Complex)>;

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b]. b may be
/// +infinity. Panels are refined worst-first; the final sum runs over panels
/// in left-to-right order so results are bit-reproducible.
QuadResult integrate_1d_detailed(const BatchFunction& f, double a, double b,
                                 const QuadratureConfig& cfg);

double integrate_1d(const BatchFunction& f, double a, double b, const QuadratureConfig& cfg);
double integrate_1d(const ScalarFunction& f, double a, double b, const QuadratureConfig& cfg);

/// Periodic trapezoid rule for the mean of a 2*pi-periodic integrand,
/// (1/2pi) * int_0^{2pi} f. Doubles the node count from 32 until two
/// successive estimates agree to cfg's tolerance.
double periodic_mean(const BatchFunction& f, const QuadratureConfig& cfg);

/// Integral of g over the disk |z| < radius by the product of an adaptive
/// radial rule with a periodic trapezoid rule in angle.
double integrate_disk(const FieldFunction& g, double radius, const QuadratureConfig& cfg);
double integrate_disk(const ScalarField& g, double radius, const QuadratureConfig& cfg);

/// Same rule over inner <= |z| < outer.
double integrate_annulus(const FieldFunction& g, double inner, double outer,
                         const QuadratureConfig& cfg);

/// Integral of g over the closed fundamental parallelogram
/// {s a + t b : s, t in [0, 1]} of the lattice, by nested adaptive rules in
/// lattice coordinates.
double integrate_parallelogram(const FieldFunction& g, const Lattice& lattice,
                               const QuadratureConfig& cfg);
double integrate_parallelogram(const ScalarField& g, const Lattice& lattice,
                               const QuadratureConfig& cfg);

FieldFunction batch(ScalarField g);
BatchFunction batch(ScalarFunction f);

}  // namespace meandim::numerics
