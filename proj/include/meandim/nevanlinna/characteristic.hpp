#pragma once

#include <vector>

#include "meandim/nevanlinna/curve.hpp"
#include "meandim/numerics/quadrature.hpp"

namespace meandim::nevanlinna {

struct CharacteristicRow {
  double r = 0.0;
  double T = 0.0;
  double ratio = 0.0;  // 2T / (pi r^2)
};

struct CharacteristicProfile {
  std::vector<CharacteristicRow> rows;
  // Cached A(t) = int int_{|z|<t} |df|^2 on the t-grid (includes every row r).
  std::vector<double> t_grid;
  std::vector<double> area_energy;
};

struct CharacteristicOptions {
  double max_grid_ratio = 1.01;  // t_{k+1} / t_k on the cached grid
};

/// T(r) = int_1^r A(t)/t dt at `samples` geometrically spaced r in [1, r_max].
/// A(t) is accumulated ring by ring on a geometric grid, interpolated by a
/// monotone cubic, and integrated against dt/t. r_max == 1 gives the single
/// row (1, 0, 0).
CharacteristicProfile characteristic(const Curve& curve, double r_max, int samples,
                                     const numerics::QuadratureConfig& cfg,
                                     const CharacteristicOptions& opts = {});

struct LimitEstimate {
  double estimate = 0.0;
  double uncertainty = 0.0;
};

/// Ratio at the largest r, with the spread (max - min) of ratios over the
/// top quartile of rows as uncertainty. A finite-r surrogate for the limsup.
/// Needs at least 4 rows.
LimitEstimate mean_energy_limit_estimate(const CharacteristicProfile& profile);

/// Monotone piecewise cubic Hermite interpolant (Fritsch-Carlson slopes).
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> slope_;
};

}  // namespace meandim::nevanlinna
