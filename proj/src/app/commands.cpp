#include "meandim/app/commands.hpp"

#include <chrono>

#include "meandim/nevanlinna/energy.hpp"
#include "meandim/numerics/parallel.hpp"
#include "meandim/simd/dispatch.hpp"
#include "meandim/widim/brick.hpp"
#include "meandim/widim/formulas.hpp"
#include "meandim/widim/serialize.hpp"
#include "meandim/widim/window.hpp"
#include "shared.hpp"

namespace meandim::app {

using detail::Context;

WidimCommand parse_widim_command(const std::string& name) {
  if (name == "cube") return WidimCommand::cube;
  if (name == "shift") return WidimCommand::shift;
  if (name == "residual") return WidimCommand::residual;
  if (name == "formula") return WidimCommand::formula;
  throw ConfigError("unknown widim subcommand '" + name + "' (cube, shift, residual, formula)");
}

nlohmann::ordered_json runtime_stamp(double seconds) {
  return {{"timestamp", utc_timestamp()},
          {"seconds", seconds},
          {"threads", numerics::worker_count()},
          {"simd", std::string(simd::to_string(simd::active_level()))}};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Report start(const char* name, const RunConfig& cfg) {
  Report r(name);
  r.set_config(config_json(cfg));
  return r;
}

}  // namespace

Report cmd_extremal(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  Report report = start("extremal", cfg);
  Context ctx(cfg);
  detail::check_curve_validation(ctx, report);
  detail::check_mean_energy(ctx, report);
  detail::check_lower_bound(ctx, report);
  detail::check_brody_normalization(ctx, report);
  detail::check_degree(ctx, report);

  // |df| on a grid over the bounding box of the fundamental parallelogram.
  const Rect box = nevanlinna::fundamental_box(ctx.curve().lattice());
  const auto handle = ctx.curve_handle();
  const int n = cfg.field.grid;
  Table field{"df_field", {"x", "y", "value"}, {}};
  for (int i = 0; i < n; ++i) {
    const double y = box.y_min + box.height() * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double x = box.x_min + box.width() * j / (n - 1);
      field.rows.push_back({x, y, handle->spherical_derivative(Complex(x, y))});
    }
  }
  report.add_table(std::move(field));
  report.set_runtime(runtime_stamp(seconds_since(t0)));
  return report;
}

Report cmd_characteristic(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  Report report = start("characteristic", cfg);
  Context ctx(cfg);
  detail::check_characteristic(ctx, report, cfg.characteristic.r_max, true);
  report.set_runtime(runtime_stamp(seconds_since(t0)));
  return report;
}

Report cmd_widim(const RunConfig& cfg, WidimCommand sub) {
  const auto t0 = Clock::now();
  Report report = start("widim", cfg);
  Context ctx(cfg);
  switch (sub) {
    case WidimCommand::cube: {
      const widim::CoverInstance inst{cfg.cube.d, cfg.cube.N, cfg.cube.s, {}};
      widim::CoverSolution sol;
      std::string method = "exact";
      try {
        sol = widim::min_multiplicity_cover(inst);
      } catch (const SizeError&) {
        if (inst.d <= 3 && inst.s >= 2) {
          sol = widim::brick_cover(inst.d, inst.N, inst.s);
          method = "brick";
        } else {
          sol = widim::product_cover(inst.d, inst.N, inst.s);
          method = "product";
        }
      }
      // Closed boxes cannot partition a connected cube: d + 1 is a lower bound when N > s.
      const double lebesgue = inst.N > inst.s ? inst.d + 1.0 : 1.0;
      report.add({"cube_multiplicity", double(sol.multiplicity), lebesgue, 0.0,
                  method == "product" ? Check::ge : Check::abs, Provenance::derived});
      report.add_note("cube_method", method);
      Table t{"cube_cover", {"d", "N", "s", "multiplicity", "widim_bound", "boxes"}, {}};
      t.rows.push_back({double(inst.d), double(inst.N), double(inst.s), double(sol.multiplicity),
                        double(sol.widim_bound), double(sol.boxes.size())});
      report.add_table(std::move(t));
      report.add_note("cube_solution", widim::solution_json(inst, sol).dump());
      break;
    }
    case WidimCommand::shift: {
      const widim::WindowSystem sys{widim::WindowKind::full_shift, cfg.shift.D, 1};
      const auto rows = widim::mean_dim_slope(sys, cfg.shift.eps_cells, cfg.shift.resolution,
                                              cfg.shift.windows);
      Table t{"shift_windows", {"n", "d", "widim_bound", "ratio", "exact"}, {}};
      for (const auto& r : rows) {
        const double per_dim = double(r.widim_bound) / (cfg.shift.D * r.n);
        if (cfg.shift.eps_cells < cfg.shift.resolution) {
          report.add({"shift_slope_n" + std::to_string(r.n), per_dim, 1.0, 0.0,
                      r.method == widim::CoverMethod::product ? Check::ge : Check::abs,
                      Provenance::derived});
        }
        t.rows.push_back({double(r.n), double(cfg.shift.D * r.n), double(r.widim_bound), r.ratio,
                          r.upper_bound_only ? 0.0 : 1.0});
      }
      report.add_table(std::move(t));
      break;
    }
    case WidimCommand::residual:
      detail::check_residual(ctx, report, cfg.residual.eps_cells, cfg.residual.resolution,
                             cfg.residual.windows, cfg.residual.fixedpoint_max, true);
      break;
    case WidimCommand::formula: {
      const FormulaSettings& f = cfg.formula;
      const double dim = double(widim::riemann_roch_dim(f.N, f.deg, f.n));
      report.add({"riemann_roch_dim", dim, 2.0 * f.n * f.n * (f.N + 1) * f.deg, 0.0, Check::abs,
                  Provenance::trivial});
      const double per_area =
          widim::meandim_lattice_to_plane(2.0 * (f.N + 1) * f.deg, ctx.curve().lattice());
      report.add({"meandim_per_plane_area", per_area, 2.0 * (f.N + 1) * f.deg / 2.0 * detail::kMeanEnergy,
                  4e-6, Check::abs, Provenance::literature});
      const double e = ctx.mean_energy();
      const widim::Theorem1Bounds b = widim::theorem1_bounds(f.N, e, e);
      report.add({"theorem1_lower", b.lower, 2.0 * (f.N + 1) * detail::kMeanEnergy, 2e-6 * (f.N + 1),
                  Check::abs, Provenance::literature});
      Table t{"formula", {"N", "deg", "n", "riemann_roch_dim", "lower", "upper"}, {}};
      t.rows.push_back({double(f.N), double(f.deg), double(f.n), dim, b.lower, b.upper});
      report.add_table(std::move(t));
      break;
    }
  }
  report.set_runtime(runtime_stamp(seconds_since(t0)));
  return report;
}

Report cmd_helmholtz(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  Report report = start("helmholtz", cfg);
  Context ctx(cfg);
  detail::check_helmholtz(ctx, report, true);
  report.set_runtime(runtime_stamp(seconds_since(t0)));
  return report;
}

}  // namespace meandim::app
