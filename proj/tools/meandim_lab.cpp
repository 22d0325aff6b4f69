// meandim_lab: command-line front end for the mean-dimension toolkit.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "meandim/app/commands.hpp"
#include "meandim/app/config.hpp"
#include "meandim/app/report.hpp"

namespace {

using namespace meandim::app;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

constexpr const char* kFooter = R"(CSV tables (17 significant digits, header row):
  extremal        df_field.csv          x, y, value   (|df| over the fundamental box)
  characteristic  characteristic.csv    r, T, ratio   (ratio = 2T/(pi r^2))
  widim cube      cube_cover.csv        d, N, s, multiplicity, widim_bound, boxes
  widim shift     shift_windows.csv     n, d, widim_bound, ratio, exact
  widim residual  residual_windows.csv  n, widim_bound, ratio, exact
  widim formula   formula.csv           N, deg, n, riemann_roch_dim, lower, upper
  helmholtz       w_lambda.csv          r, w, series
                  stencil_residual.csv  h, residual, order
                  barrier_u.csv         x, y, value
Exit codes: 0 success, 1 a check or criterion failed, 2 usage or config error.
MEANDIM_LAB_THREADS caps worker threads.)";

void print_summary(const Report& report) {
  for (const Scalar& s : report.scalars()) {
    std::printf("%s  %-36s %.17g  (%s %.17g, tol %.3g)\n", s.pass() ? "PASS" : "FAIL",
                s.name.c_str(), s.value, to_string(s.check).c_str(), s.expected, s.tolerance);
  }
  for (const CriterionOutcome& c : report.criteria()) {
    std::printf("%s  criterion %2d  %s%s%s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                c.message.empty() ? "" : "  -- ", c.message.c_str());
  }
}

int emit(const Report& report, const RunConfig& cfg) {
  if (cfg.output.json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    print_summary(report);
  }
  if (!cfg.output.dir.empty()) {
    for (const std::string& path : write_outputs(report, cfg.output.dir, cfg.output.csv)) {
      std::cerr << "wrote " << path << "\n";
    }
  } else if (cfg.output.csv) {
    for (const Table& t : report.tables()) std::cout << "# " << t.name << "\n" << table_csv(t);
  }
  if (report.all_pass()) return kExitOk;
  for (const CriterionOutcome& c : report.criteria()) {
    if (!c.pass) {
      std::cerr << "verification failed: criterion " << c.id << " (" << c.title << "): "
                << c.message << "\n";
      return kExitFail;
    }
  }
  for (const Scalar& s : report.scalars()) {
    if (!s.pass()) {
      std::cerr << "check failed: " << s.name << "\n";
      break;
    }
  }
  return kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mean-dimension and Brody-curve verification toolkit", "meandim_lab"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  bool json = false;
  bool csv = false;
  std::optional<std::uint64_t> seed;
  bool list = false;
  std::string widim_sub;

  app.add_option("--config", config_path, "JSON config file (schema_version 1)")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "directory for report.json and CSV tables");
  app.add_flag("--json", json, "print the JSON report on stdout");
  app.add_flag("--csv", csv, "emit CSV tables (into --out, else on stdout)");
  app.add_option("--seed", seed, "random seed (overrides the config)");

  CLI::App* extremal = app.add_subcommand("extremal", "extremal elliptic Brody curve");
  CLI::App* characteristic = app.add_subcommand("characteristic", "characteristic function profile");
  CLI::App* widim = app.add_subcommand("widim", "cover multiplicities and dimension formulas");
  widim->add_option("kind", widim_sub, "cube | shift | residual | formula")
      ->required()
      ->check(CLI::IsMember({"cube", "shift", "residual", "formula"}));
  CLI::App* helmholtz = app.add_subcommand("helmholtz", "Helmholtz barrier and maximum principle");
  CLI::App* verify = app.add_subcommand("verify", "run every acceptance criterion");
  verify->add_flag("--list", list, "print the criteria and exit");
  for (CLI::App* sub : {extremal, characteristic, widim, helmholtz, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed() && list) {
    for (const CriterionInfo& c : criteria_list()) std::printf("%2d  %s\n", c.id, c.title.c_str());
    return kExitOk;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
    if (seed) cfg.seed = *seed;
    if (!out_dir.empty()) cfg.output.dir = out_dir;
    if (json) cfg.output.json = true;
    if (csv) cfg.output.csv = true;
    cfg.validate();
  } catch (const meandim::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (extremal->parsed()) return emit(cmd_extremal(cfg), cfg);
    if (characteristic->parsed()) return emit(cmd_characteristic(cfg), cfg);
    if (widim->parsed()) return emit(cmd_widim(cfg, parse_widim_command(widim_sub)), cfg);
    if (helmholtz->parsed()) return emit(cmd_helmholtz(cfg), cfg);
    if (verify->parsed()) return emit(cmd_verify(cfg), cfg);
  } catch (const meandim::InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
