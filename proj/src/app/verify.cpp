#include <chrono>

#include "meandim/app/commands.hpp"
#include "shared.hpp"

namespace meandim::app {

const std::vector<CriterionInfo>& criteria_list() {
  static const std::vector<CriterionInfo> list = {
      {1, "mean energy of the extremal curve (closed form and quadrature)"},
      {2, "mean-dimension lower bound 4 e(f)"},
      {3, "Brody normalization sup|df| = 1 and the cubic ratio sup"},
      {4, "energy over a fundamental domain equals the degree"},
      {5, "characteristic bound T <= pi r^2/2 and ratio at r = 50"},
      {6, "exact and brick cover multiplicities"},
      {7, "residual system: fixed-point dimensions and window ratios"},
      {8, "dimension formulas on fixed and random inputs"},
      {9, "Helmholtz barrier: values, stencil order, maximum principle"},
      {10, "determinism of the verify report"},
  };
  return list;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Plan {
  int id;
  double time_limit;  // seconds, 0 for none
  detail::Step step;
};

}  // namespace

Report run_suite(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  Report report("verify");
  report.set_config(config_json(cfg));
  detail::Context ctx(cfg);
  const std::vector<Plan> plan = {
      {1, 60.0, detail::check_mean_energy},
      {2, 0.0, detail::check_lower_bound},
      {3, 30.0, detail::check_brody_normalization},
      {4, 0.0, detail::check_degree},
      {5, 0.0, [](detail::Context& x, Report& r) { detail::check_characteristic(x, r, 50.0, false); }},
      {6, 120.0, detail::check_cover_combinatorics},
      {7, 0.0,
       [](detail::Context& x, Report& r) { detail::check_residual(x, r, 2, 4, {1, 2, 3, 4}, 7, false); }},
      {8, 0.0, detail::check_formulas},
      {9, 0.0, [](detail::Context& x, Report& r) { detail::check_helmholtz(x, r, false); }},
  };
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  for (const Plan& p : plan) {
    const auto start = Clock::now();
    CriterionOutcome out = detail::run_step(p.id, criteria_list()[p.id - 1].title, ctx, report, p.step);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.pass && p.time_limit > 0.0 && secs > p.time_limit) {
      out.pass = false;
      out.message = "runtime above " + std::to_string(int(p.time_limit)) + " s";
    }
    timings[std::to_string(p.id)] = secs;
    report.add_criterion(std::move(out));
  }
  nlohmann::ordered_json runtime =
      runtime_stamp(std::chrono::duration<double>(Clock::now() - t0).count());
  runtime["criterion_seconds"] = std::move(timings);
  report.set_runtime(std::move(runtime));
  return report;
}

Report cmd_verify(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  Report first = run_suite(cfg);
  const Report second = run_suite(cfg);
  const bool same = first.deterministic_json() == second.deterministic_json();
  first.add_criterion({10, criteria_list()[9].title, same,
                       same ? "" : "second run produced a different report"});
  nlohmann::ordered_json runtime = first.to_json()["runtime"];
  runtime["seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
  first.set_runtime(std::move(runtime));
  return first;
}

}  // namespace meandim::app
