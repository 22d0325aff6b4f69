#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace meandim::app {

/// Where an expected value comes from: a published closed-form or quoted
/// value, an independent computation, or a definition.
enum class Provenance { literature, derived, trivial };

std::string to_string(Provenance p);

/// How value is compared with expected.
enum class Check {
  abs,  // |value - expected| <= tolerance
  rel,  // |value - expected| <= tolerance * |expected|
  le,   // value <= expected + tolerance
  ge,   // value >= expected - tolerance
};

std::string to_string(Check c);

struct Scalar {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Check check = Check::abs;
  Provenance provenance = Provenance::derived;

  bool pass() const noexcept;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string message;  // first failing check or error text
};

class Report {
 public:
  explicit Report(std::string command);

  /// Adds a scalar and returns whether it passed.
  bool add(Scalar s);
  void add_table(Table t);
  void add_criterion(CriterionOutcome c);
  void add_note(const std::string& key, const std::string& text);
  void set_config(nlohmann::ordered_json config);
  void set_runtime(nlohmann::ordered_json runtime);

  const std::vector<Scalar>& scalars() const noexcept { return scalars_; }
  const std::vector<Table>& tables() const noexcept { return tables_; }
  const std::vector<CriterionOutcome>& criteria() const noexcept { return criteria_; }

  /// True when every scalar and every criterion passed.
  bool all_pass() const noexcept;

  /// Full document, including the "runtime" block.
  nlohmann::ordered_json to_json() const;

  /// Document without the "runtime" block; equal for equal config and seed.
  nlohmann::ordered_json deterministic_json() const;

 private:
  std::string command_;
  nlohmann::ordered_json config_;
  nlohmann::ordered_json notes_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json runtime_ = nlohmann::ordered_json::object();
  std::vector<Scalar> scalars_;
  std::vector<Table> tables_;
  std::vector<CriterionOutcome> criteria_;
};

/// CSV with a header row; numbers at 17 significant digits.
std::string table_csv(const Table& t);

/// Writes report.json and, when csv is set, <table>.csv for every table
/// into dir (created if missing). Returns the written paths.
std::vector<std::string> write_outputs(const Report& report, const std::string& dir, bool csv);

/// UTC timestamp, ISO 8601.
std::string utc_timestamp();

}  // namespace meandim::app
