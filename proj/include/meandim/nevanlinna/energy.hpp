#pragma once

#include <variant>

#include "meandim/core.hpp"
#include "meandim/elliptic/lattice.hpp"
#include "meandim/nevanlinna/curve.hpp"
#include "meandim/numerics/quadrature.hpp"
#include "meandim/numerics/sup_search.hpp"

namespace meandim::nevanlinna {

/// Disk |z| < radius centred at the origin.
struct Disk {
  double radius = 1.0;
};

/// Closed fundamental parallelogram of a lattice.
struct Parallelogram {
  Lattice lattice;
};

using Region = std::variant<Disk, Parallelogram>;

/// int int_region |df|^2 dx dy.
double energy_integral(const Curve& curve, const Region& region,
                       const numerics::QuadratureConfig& cfg);

/// Energy over a fundamental domain divided by its area. Throws
/// InvalidArgument for curves without a period lattice.
double mean_energy_periodic(const Curve& curve, const numerics::QuadratureConfig& cfg);

struct BrodyCheck {
  bool ok = false;
  double sup = 0.0;  // largest |df| found
  Complex argmax{};
};

inline constexpr double kBrodyTolerance = 1e-6;

/// Searches sup |df| over the rectangle; ok iff it stays <= 1 + 1e-6.
BrodyCheck brody_check(const Curve& curve, const Rect& domain,
                       const numerics::SupSearchConfig& cfg);

/// Bounding box of a lattice's fundamental parallelogram.
Rect fundamental_box(const Lattice& lattice);

}  // namespace meandim::nevanlinna
