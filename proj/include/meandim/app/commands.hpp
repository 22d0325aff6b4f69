#pragma once

#include <string>
#include <vector>

#include "meandim/app/config.hpp"
#include "meandim/app/report.hpp"

namespace meandim::app {

enum class WidimCommand { cube, shift, residual, formula };

WidimCommand parse_widim_command(const std::string& name);

/// Each command returns a report whose scalars carry expected values and
/// tolerances; all_pass() decides the exit code.
Report cmd_extremal(const RunConfig& cfg);
Report cmd_characteristic(const RunConfig& cfg);
Report cmd_widim(const RunConfig& cfg, WidimCommand sub);
Report cmd_helmholtz(const RunConfig& cfg);

struct CriterionInfo {
  int id = 0;
  std::string title;
};

const std::vector<CriterionInfo>& criteria_list();

/// Criteria 1-9 in order; failures and errors are recorded, never thrown.
Report run_suite(const RunConfig& cfg);

/// run_suite, then criterion 10: a second run must give the same
/// deterministic document.
Report cmd_verify(const RunConfig& cfg);

/// Runtime block shared by all commands: timestamp, threads, SIMD level.
nlohmann::ordered_json runtime_stamp(double seconds);

}  // namespace meandim::app
