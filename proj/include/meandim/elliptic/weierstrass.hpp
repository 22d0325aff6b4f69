#pragma once

#include <vector>

#include "meandim/core.hpp"
#include "meandim/elliptic/lattice.hpp"

namespace meandim {

struct WeierstrassValue {
  Complex p;   // value
  Complex dp;  // derivative
};

/// Weierstrass p-function of a lattice with invariants g2, g3.
///
/// Evaluation reduces z to the offset w from its nearest lattice point and
/// sums the Laurent expansion p(w) = 1/w^2 + sum_{k>=2} c_k w^(2k-2), halving
/// w (and applying the duplication formula on the way back) while |w|
/// exceeds reduction_radius. The invariants must belong to the lattice;
/// ode_residual() is the consistency check.
class WeierstrassP {
 public:
  static constexpr int kDefaultSeriesOrder = 40;

  /// reduction_radius <= 0 selects half the shortest lattice vector.
  WeierstrassP(Lattice lattice, Complex g2, Complex g3, int series_order = kDefaultSeriesOrder,
               double reduction_radius = 0.0);

  const Lattice& lattice() const noexcept { return lattice_; }
  Complex g2() const noexcept { return g2_; }
  Complex g3() const noexcept { return g3_; }
  int series_order() const noexcept { return static_cast<int>(coeffs_.size()) + 1; }
  double reduction_radius() const noexcept { return reduction_radius_; }
  double pole_guard() const noexcept { return pole_guard_; }

  /// Laurent coefficients c_2 .. c_K.
  const std::vector<Complex>& laurent() const noexcept { return coeffs_; }

  /// p(z), p'(z). Throws PoleError within pole_guard() of a lattice point.
  WeierstrassValue eval(Complex z) const;

  /// Same, for an offset w already measured from the nearest lattice point.
  WeierstrassValue eval_offset(Complex w) const;

  /// 1/p and (1/p)' from the series, finite at the lattice points; intended
  /// for |w| well inside the Laurent disk (|w| < reduction_radius()).
  WeierstrassValue reciprocal_offset(Complex w) const;

  /// |p'^2 - (4p^3 - g2 p - g3)| / (1 + |p|^3) at z.
  double ode_residual(Complex z) const;

  /// Offset of z from its nearest lattice point.
  Complex offset(Complex z) const noexcept { return z - lattice_.nearest_point(z); }

 private:
  WeierstrassValue series(Complex w) const noexcept;

  Lattice lattice_;
  Complex g2_;
  Complex g3_;
  std::vector<Complex> coeffs_;
  double reduction_radius_;
  double pole_guard_;
};

/// Free-function form: p(z), p'(z).
WeierstrassValue wp_eval(const WeierstrassP& wp, Complex z);

}  // namespace meandim
