#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "meandim/helmholtz/barrier.hpp"
#include "meandim/helmholtz/w_lambda.hpp"
#include "meandim/nevanlinna/characteristic.hpp"
#include "meandim/nevanlinna/energy.hpp"
#include "meandim/numerics/sup_search.hpp"
#include "meandim/widim/brick.hpp"
#include "meandim/widim/formulas.hpp"
#include "meandim/widim/window.hpp"
#include "shared.hpp"

namespace meandim::app::detail {

double bessel_i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

const ExtremalBrodyCurve& Context::curve() {
  if (!curve_) {
    curve_ = std::make_shared<const ExtremalBrodyCurve>(ExtremalBrodyCurve::build(cfg.quadrature));
  }
  return *curve_;
}

nevanlinna::CurveHandle Context::curve_handle() {
  curve();
  return nevanlinna::make_extremal_curve(curve_);
}

double Context::mean_energy() {
  if (std::isnan(mean_energy_)) {
    mean_energy_ = nevanlinna::mean_energy_periodic(*curve_handle(), cfg.quadrature);
  }
  return mean_energy_;
}

CriterionOutcome run_step(int id, const std::string& title, Context& ctx, Report& report,
                          const Step& step) {
  CriterionOutcome out{id, title, true, ""};
  const std::size_t first = report.scalars().size();
  try {
    step(ctx, report);
  } catch (const std::exception& e) {
    out.pass = false;
    out.message = std::string("error: ") + e.what();
    return out;
  }
  for (std::size_t i = first; i < report.scalars().size(); ++i) {
    const Scalar& s = report.scalars()[i];
    if (!s.pass()) {
      out.pass = false;
      out.message = "check failed: " + s.name;
      break;
    }
  }
  return out;
}

void check_mean_energy(Context& ctx, Report& report) {
  const ExtremalBrodyCurve& curve = ctx.curve();
  const double w1 = curve.omega1();
  const double closed = kDegree / (2.0 * std::numbers::sqrt3 * w1 * w1);
  const double quad = ctx.mean_energy();
  report.add({"elliptic_integral", curve.elliptic_integral(), kEllipticIntegral, 1e-12, Check::abs,
              Provenance::derived});
  report.add({"omega1", w1, kOmega1, 1e-12, Check::abs, Provenance::derived});
  report.add({"lattice_area", curve.lattice().area(), kLatticeArea, 1e-10, Check::abs,
              Provenance::derived});
  report.add({"mean_energy_closed_form", closed, kMeanEnergy, 1e-6, Check::abs,
              Provenance::literature});
  report.add({"mean_energy_quadrature", quad, kMeanEnergy, 1e-6, Check::abs, Provenance::literature});
  report.add({"mean_energy_route_gap", std::fabs(closed - quad), 0.0, 1e-5, Check::le,
              Provenance::derived});
}

void check_lower_bound(Context& ctx, Report& report) {
  const double e = ctx.mean_energy();
  const widim::Theorem1Bounds b = widim::theorem1_bounds(1, e, e);
  report.add({"lower_bound_4e", b.lower, kLowerBound, 4e-6, Check::abs, Provenance::literature});
}

void check_brody_normalization(Context& ctx, Report& report) {
  const ExtremalBrodyCurve& curve = ctx.curve();
  const numerics::SupSearchConfig sc = ctx.cfg.seeded_sup_search();
  const nevanlinna::BrodyCheck bc = nevanlinna::brody_check(
      *ctx.curve_handle(), nevanlinna::fundamental_box(curve.lattice()), sc);
  report.add({"sup_df", bc.sup, 1.0, 1e-4, Check::abs, Provenance::literature});
  report.add({"sup_df_brody_bound", bc.sup, 1.0, nevanlinna::kBrodyTolerance, Check::le,
              Provenance::literature});
  const double c = 1.0 / std::sqrt(8.0);
  const numerics::ScalarField ratio = [c](Complex z) {
    return std::abs(z * z * z - c) / std::pow(1.0 + std::norm(z), 2);
  };
  const numerics::SupResult found = numerics::sup_search(ratio, Rect::centered_square(2.0), sc);
  report.add({"sup_cubic_ratio", found.value, c, 1e-8, Check::abs, Provenance::literature});
}

void check_degree(Context& ctx, Report& report) {
  const double energy = nevanlinna::energy_integral(
      *ctx.curve_handle(), nevanlinna::Parallelogram{ctx.curve().lattice()}, ctx.cfg.quadrature);
  report.add({"degree_energy", energy, kDegree, 1e-6, Check::abs, Provenance::literature});
}

void check_curve_validation(Context& ctx, Report& report) {
  const CurveValidation& v = ctx.curve().validation();
  const double tol = ExtremalBrodyCurve::kValidationTolerance;
  report.add({"critical_value_e1_residual", v.critical_value_e1, 0.0, tol, Check::le, Provenance::derived});
  report.add({"critical_value_e2_residual", v.critical_value_e2, 0.0, tol, Check::le, Provenance::derived});
  report.add({"pole_at_omega1_residual", v.pole_at_omega1, 0.0, tol, Check::le, Provenance::derived});
  report.add({"half_period_residual", v.half_period, 0.0, tol, Check::le, Provenance::derived});
  report.add({"ode_residual_max", v.max_ode_residual, 0.0, tol, Check::le, Provenance::derived});
}

void check_characteristic(Context& ctx, Report& report, double r_max, bool with_table) {
  const CharacteristicSettings& cs = ctx.cfg.characteristic;
  nevanlinna::CharacteristicOptions opts;
  opts.max_grid_ratio = cs.max_grid_ratio;
  const nevanlinna::CharacteristicProfile profile = nevanlinna::characteristic(
      *ctx.curve_handle(), r_max, cs.samples, ctx.cfg.characteristic_quadrature(), opts);

  double worst = 0.0;
  for (const auto& row : profile.rows) worst = std::max(worst, row.ratio);
  report.add({"characteristic_T_at_1", profile.rows.front().T, 0.0, 0.0, Check::abs,
              Provenance::trivial});
  report.add({"characteristic_max_ratio", worst, 1.0, 0.0, Check::le, Provenance::literature});
  if (r_max >= 50.0) {
    const double e = ctx.mean_energy();
    report.add({"characteristic_final_ratio", profile.rows.back().ratio, e, 0.05, Check::rel,
                Provenance::derived});
    if (profile.rows.size() >= 4) {
      const nevanlinna::LimitEstimate est = nevanlinna::mean_energy_limit_estimate(profile);
      report.add({"mean_energy_limit_estimate", est.estimate, e, est.uncertainty, Check::abs,
                  Provenance::derived});
      report.add_note("mean_energy_limit_estimate",
                      "finite-r surrogate for the limsup: ratio at the largest r; tolerance is the "
                      "spread of ratios over the top quartile of r");
    }
  }
  if (with_table) {
    Table t{"characteristic", {"r", "T", "ratio"}, {}};
    for (const auto& row : profile.rows) t.rows.push_back({row.r, row.T, row.ratio});
    report.add_table(std::move(t));
  }
}

void check_cover_combinatorics(Context&, Report& report) {
  using widim::CoverInstance;
  const widim::CoverSolution line = widim::min_multiplicity_cover(CoverInstance{1, 4, 2, {}});
  report.add({"exact_cover_d1_N4_s2", double(line.multiplicity), 2.0, 0.0, Check::abs,
              Provenance::derived});
  const widim::CoverSolution square = widim::min_multiplicity_cover(CoverInstance{2, 3, 2, {}});
  report.add({"exact_cover_d2_N3_s2", double(square.multiplicity), 3.0, 0.0, Check::abs,
              Provenance::derived});
  const int extents[] = {6, 6, 4};
  for (int d = 1; d <= 3; ++d) {
    const widim::CoverSolution b = widim::brick_cover(d, extents[d - 1], 2);
    report.add({"brick_cover_d" + std::to_string(d) + "_N" + std::to_string(extents[d - 1]) + "_s2",
                double(b.multiplicity), d + 1.0, 0.0, Check::abs, Provenance::derived});
  }
}

void check_residual(Context&, Report& report, int eps_cells, int resolution,
                    const std::vector<int>& windows, int fixedpoint_max, bool with_table) {
  for (int n = 1; n <= fixedpoint_max; ++n) {
    report.add({"residual_fixedpoint_dim_" + std::to_string(n),
                double(widim::residual_fixedpoint_dim(n)), double(n), 0.0, Check::abs,
                Provenance::literature});
  }
  const std::vector<widim::WindowBound> rows = widim::mean_dim_slope(
      {widim::WindowKind::residual, 1, 1}, eps_cells, resolution, windows);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    report.add({"residual_ratio_step_n" + std::to_string(rows[i].n), rows[i].ratio,
                rows[i - 1].ratio, 0.0, Check::le, Provenance::derived});
  }
  if (!rows.empty()) {
    report.add({"residual_ratio_final", rows.back().ratio, 0.5, 0.0, Check::le, Provenance::derived});
  }
  if (with_table) {
    Table t{"residual_windows", {"n", "widim_bound", "ratio", "exact"}, {}};
    for (const auto& r : rows) {
      t.rows.push_back({double(r.n), double(r.widim_bound), r.ratio, r.upper_bound_only ? 0.0 : 1.0});
    }
    report.add_table(std::move(t));
  }
}

void check_formulas(Context& ctx, Report& report) {
  report.add({"riemann_roch_dim_1_2_1", double(widim::riemann_roch_dim(1, 2, 1)), 8.0, 0.0,
              Check::abs, Provenance::literature});
  std::mt19937_64 rng(ctx.cfg.seed);
  std::uniform_int_distribution<int> pick_n(1, 8);
  for (int k = 0; k < 3; ++k) {
    const int N = pick_n(rng);
    const double e_sup = std::generate_canonical<double, 53>(rng);
    const double e_ell = e_sup * std::generate_canonical<double, 53>(rng);
    const widim::Theorem1Bounds b = widim::theorem1_bounds(N, e_ell, e_sup);
    const std::string tag = "theorem1_random_" + std::to_string(k + 1);
    report.add({tag + "_lower", b.lower, e_ell * N * 2.0 + e_ell * 2.0, 1e-12, Check::abs,
                Provenance::trivial});
    report.add({tag + "_upper", b.upper, (e_sup * N) * 4.0, 1e-12, Check::abs, Provenance::trivial});
  }
}

void check_helmholtz(Context& ctx, Report& report, bool with_tables) {
  const HelmholtzSettings& hs = ctx.cfg.helmholtz;
  using helmholtz::HelmholtzSolution;
  const HelmholtzSolution w{hs.lambda};
  report.add({"w_lambda_at_0", helmholtz::w_eval(w, 0.0), 1.0, 1e-12, Check::abs,
              Provenance::literature});
  report.add({"w_1_at_1", helmholtz::w_eval(HelmholtzSolution{1.0}, 1.0), bessel_i0_series(1.0),
              1e-8, Check::abs, Provenance::derived});
  const double on_axis = helmholtz::w_eval(w, 1.0);
  for (double theta : {0.7, 2.1, 4.4}) {
    report.add({"w_lambda_rotation_" + std::to_string(theta).substr(0, 3),
                helmholtz::w_eval(w, std::polar(1.0, theta)), on_axis, 1e-10, Check::abs,
                Provenance::trivial});
  }
  report.add({"constant_residual", helmholtz::helmholtz_residual([](Complex) { return 1.0; },
                                                                hs.lambda, 0.3, 0.1),
              hs.lambda, 1e-12, Check::abs, Provenance::trivial});

  // Convergence order of the stencil residual.
  const HelmholtzSolution wr{hs.residual_lambda};
  const Complex z0(hs.residual_point[0], hs.residual_point[1]);
  std::vector<double> res;
  for (double h : hs.h_list) res.push_back(std::fabs(helmholtz::helmholtz_residual(wr, z0, h)));
  Table order_table{"stencil_residual", {"h", "residual", "order"}, {}};
  order_table.rows.push_back({hs.h_list[0], res[0], std::nan("")});
  for (std::size_t k = 1; k < res.size(); ++k) {
    const double order = std::log(res[k - 1] / res[k]) / std::log(hs.h_list[k - 1] / hs.h_list[k]);
    report.add({"stencil_order_" + std::to_string(k), order, 2.0, 0.5, Check::abs,
                Provenance::derived});
    order_table.rows.push_back({hs.h_list[k], res[k], order});
  }

  // Barrier demo: g = c, zero boundary, so 0 <= u <= 1.
  helmholtz::GridProblem p;
  p.R = hs.barrier.R;
  p.h = hs.barrier.h;
  p.c = hs.barrier.c;
  const double c = p.c;
  p.rhs = [c](Complex) { return c; };
  p.boundary = [](Complex) { return 0.0; };
  helmholtz::SolveStats stats;
  const helmholtz::GridFunction u = helmholtz::barrier_solve(p, &stats);
  const helmholtz::MaxPrincipleCheck mp = helmholtz::max_principle_check(p, u);
  const double u_min = *std::min_element(u.values.begin(), u.values.end());
  report.add({"barrier_residual", stats.residual, 0.0, helmholtz::kSolveTolerance, Check::le,
              Provenance::derived});
  report.add({"barrier_sup_u", mp.sup_u, 1.0, 1e-8, Check::le, Provenance::derived});
  report.add({"barrier_max_principle", mp.ok ? 1.0 : 0.0, 1.0, 0.0, Check::abs, Provenance::derived});
  report.add({"barrier_min_u", u_min, 0.0, 1e-12, Check::ge, Provenance::derived});

  // Oscillating data and nonzero boundary, compared against the w-shaped barrier.
  helmholtz::GridProblem q = p;
  q.rhs = [c](Complex z) { return c * std::cos(z.real()) * std::sin(2.0 * z.imag()); };
  q.boundary = [](Complex z) { return 1.0 + 0.5 * std::cos(3.0 * std::arg(z)); };
  const helmholtz::GridFunction uq = helmholtz::barrier_solve(q);
  const helmholtz::GridFunction bound = helmholtz::barrier_bound(q);
  double excess = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < uq.values.size(); ++k) {
    excess = std::max(excess, std::fabs(uq.values[k]) - bound.values[k]);
  }
  report.add({"barrier_comparison_excess", excess, 0.0, 1e-9, Check::le, Provenance::derived});
  report.add({"barrier_comparison_max_principle",
              helmholtz::max_principle_check(q, uq).ok ? 1.0 : 0.0, 1.0, 0.0, Check::abs,
              Provenance::derived});

  if (with_tables) {
    Table samples{"w_lambda", {"r", "w", "series"}, {}};
    for (double r : hs.radii) {
      samples.rows.push_back({r, helmholtz::w_eval(w, r), bessel_i0_series(std::sqrt(hs.lambda) * r)});
    }
    report.add_table(std::move(samples));
    report.add_table(std::move(order_table));
    Table grid{"barrier_u", {"x", "y", "value"}, {}};
    for (std::size_t i = 0; i < u.n; ++i) {
      for (std::size_t j = 0; j < u.n; ++j) grid.rows.push_back({u.x(j), u.y(i), u.at(i, j)});
    }
    report.add_table(std::move(grid));
  }
}

}  // namespace meandim::app::detail
