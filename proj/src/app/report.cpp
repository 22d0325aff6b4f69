#include "meandim/app/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "meandim/core.hpp"

namespace meandim::app {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::literature: return "literature";
    case Provenance::derived: return "derived";
    case Provenance::trivial: return "trivial";
  }
  return "unknown";
}

std::string to_string(Check c) {
  switch (c) {
    case Check::abs: return "abs";
    case Check::rel: return "rel";
    case Check::le: return "le";
    case Check::ge: return "ge";
  }
  return "unknown";
}

bool Scalar::pass() const noexcept {
  if (!std::isfinite(value)) return false;
  switch (check) {
    case Check::abs: return std::fabs(value - expected) <= tolerance;
    case Check::rel: return std::fabs(value - expected) <= tolerance * std::fabs(expected);
    case Check::le: return value <= expected + tolerance;
    case Check::ge: return value >= expected - tolerance;
  }
  return false;
}

Report::Report(std::string command) : command_(std::move(command)) {}

bool Report::add(Scalar s) {
  const bool ok = s.pass();
  scalars_.push_back(std::move(s));
  return ok;
}

void Report::add_table(Table t) { tables_.push_back(std::move(t)); }
void Report::add_criterion(CriterionOutcome c) { criteria_.push_back(std::move(c)); }
void Report::add_note(const std::string& key, const std::string& text) { notes_[key] = text; }
void Report::set_config(nlohmann::ordered_json config) { config_ = std::move(config); }
void Report::set_runtime(nlohmann::ordered_json runtime) { runtime_ = std::move(runtime); }

bool Report::all_pass() const noexcept {
  for (const Scalar& s : scalars_) if (!s.pass()) return false;
  for (const CriterionOutcome& c : criteria_) if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json Report::deterministic_json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["config"] = config_;
  j["pass"] = all_pass();
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const Scalar& s : scalars_) {
    results.push_back({{"name", s.name},
                       {"value", s.value},
                       {"expected", s.expected},
                       {"tolerance", s.tolerance},
                       {"check", to_string(s.check)},
                       {"provenance", to_string(s.provenance)},
                       {"pass", s.pass()}});
  }
  j["results"] = std::move(results);
  if (!criteria_.empty()) {
    nlohmann::ordered_json crit = nlohmann::ordered_json::array();
    for (const CriterionOutcome& c : criteria_) {
      crit.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"message", c.message}});
    }
    j["criteria"] = std::move(crit);
  }
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  for (const Table& t : tables_) tables[t.name] = {{"columns", t.columns}, {"rows", t.rows}};
  j["tables"] = std::move(tables);
  if (!notes_.empty()) j["notes"] = notes_;
  return j;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j = deterministic_json();
  j["runtime"] = runtime_;
  return j;
}

std::string table_csv(const Table& t) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t k = 0; k < t.columns.size(); ++k) os << (k ? "," : "") << t.columns[k];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> write_outputs(const Report& report, const std::string& dir, bool csv) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory " + dir + ": " + ec.message());
  std::vector<std::string> written;
  auto write = [&](const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    written.push_back(path.string());
  };
  write(fs::path(dir) / "report.json", report.to_json().dump(2) + "\n");
  if (csv) {
    for (const Table& t : report.tables()) write(fs::path(dir) / (t.name + ".csv"), table_csv(t));
  }
  return written;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace meandim::app
