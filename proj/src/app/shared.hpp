#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

#include "meandim/app/commands.hpp"
#include "meandim/elliptic/brody_curve.hpp"
#include "meandim/nevanlinna/curve.hpp"

namespace meandim::app::detail {

// Quoted closed-form values.
inline constexpr double kMeanEnergy = 0.6150198678198;
inline constexpr double kLowerBound = 2.460079471279;
inline constexpr int kDegree = 2;

// Independent high-precision evaluations (50-digit arithmetic).
inline constexpr double kEllipticIntegral = 2.4286506478875815896;
inline constexpr double kOmega1 = 0.96889142776668871600;
inline constexpr double kLatticeArea = 3.2519274655138264500;

/// I0(x) = sum_k (x^2/4)^k / (k!)^2, summed until terms vanish.
double bessel_i0_series(double x);

/// Lazily built extremal curve shared by the checks of one run.
class Context {
 public:
  explicit Context(const RunConfig& cfg) : cfg(cfg) {}

  const RunConfig& cfg;

  const ExtremalBrodyCurve& curve();
  nevanlinna::CurveHandle curve_handle();

  /// Mean energy by 2-d quadrature, computed once.
  double mean_energy();

 private:
  std::shared_ptr<const ExtremalBrodyCurve> curve_;
  double mean_energy_ = std::numeric_limits<double>::quiet_NaN();
};

using Step = std::function<void(Context&, Report&)>;

/// Runs a step, returning the outcome: fails on the first failing scalar
/// the step added, or on any exception.
CriterionOutcome run_step(int id, const std::string& title, Context& ctx, Report& report,
                          const Step& step);

// Checks shared by the commands and the verify suite.
void check_mean_energy(Context& ctx, Report& report);
void check_lower_bound(Context& ctx, Report& report);
void check_brody_normalization(Context& ctx, Report& report);
void check_degree(Context& ctx, Report& report);
void check_curve_validation(Context& ctx, Report& report);
void check_characteristic(Context& ctx, Report& report, double r_max, bool with_table);
void check_cover_combinatorics(Context& ctx, Report& report);
void check_residual(Context& ctx, Report& report, int eps_cells, int resolution,
                    const std::vector<int>& windows, int fixedpoint_max, bool with_table);
void check_formulas(Context& ctx, Report& report);
void check_helmholtz(Context& ctx, Report& report, bool with_tables);

}  // namespace meandim::app::detail
