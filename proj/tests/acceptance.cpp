// Runs every acceptance criterion with the default configuration.

#include <cstdio>

#include "meandim/app/commands.hpp"
#include "meandim/app/config.hpp"

int main() {
  using namespace meandim::app;
  const Report report = cmd_verify(RunConfig{});
  bool ok = true;
  for (const CriterionOutcome& c : report.criteria()) {
    std::printf("%s  criterion %2d  %s%s%s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                c.message.empty() ? "" : "  -- ", c.message.c_str());
    ok = ok && c.pass;
  }
  if (report.criteria().size() != criteria_list().size()) {
    std::printf("FAIL  expected %zu criteria, got %zu\n", criteria_list().size(),
                report.criteria().size());
    ok = false;
  }
  return ok ? 0 : 1;
}
