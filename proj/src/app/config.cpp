#include "meandim/app/config.hpp"

#include <fstream>
#include <limits>
#include <set>

namespace meandim::app {
namespace {

using nlohmann::json;

std::string type_error(const std::string& path, const char* want) {
  return "config key '" + path + "' must be " + want;
}

// Reads keys from one JSON object and rejects whatever was not read.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError("config section '" + name() + "' must be an object");
  }

  void read(const char* key, int& out) {
    if (const json* v = take(key)) {
      const bool fits = v->is_number_integer() &&
                        (v->is_number_unsigned()
                             ? v->get<std::uint64_t>() <= std::numeric_limits<int>::max()
                             : v->get<std::int64_t>() >= std::numeric_limits<int>::min() &&
                                   v->get<std::int64_t>() <= std::numeric_limits<int>::max());
      if (!fits) throw ConfigError(type_error(full(key), "an integer"));
      out = v->get<int>();
    }
  }
  void read(const char* key, std::uint64_t& out) {
    if (const json* v = take(key)) {
      const bool ok = v->is_number_unsigned() || (v->is_number_integer() && v->get<std::int64_t>() >= 0);
      if (!ok) throw ConfigError(type_error(full(key), "a non-negative integer"));
      out = v->get<std::uint64_t>();
    }
  }
  void read(const char* key, double& out) {
    if (const json* v = take(key)) {
      if (!v->is_number()) throw ConfigError(type_error(full(key), "a number"));
      out = v->get<double>();
    }
  }
  void read(const char* key, bool& out) {
    if (const json* v = take(key)) {
      if (!v->is_boolean()) throw ConfigError(type_error(full(key), "a boolean"));
      out = v->get<bool>();
    }
  }
  void read(const char* key, std::string& out) {
    if (const json* v = take(key)) {
      if (!v->is_string()) throw ConfigError(type_error(full(key), "a string"));
      out = v->get<std::string>();
    }
  }
  void read(const char* key, std::vector<int>& out) {
    if (const json* v = take(key)) {
      if (!v->is_array()) throw ConfigError(type_error(full(key), "an array of integers"));
      out.clear();
      for (const json& x : *v) {
        if (!x.is_number_integer()) throw ConfigError(type_error(full(key), "an array of integers"));
        out.push_back(x.get<int>());
      }
    }
  }
  void read(const char* key, std::vector<double>& out) {
    if (const json* v = take(key)) {
      if (!v->is_array()) throw ConfigError(type_error(full(key), "an array of numbers"));
      out.clear();
      for (const json& x : *v) {
        if (!x.is_number()) throw ConfigError(type_error(full(key), "an array of numbers"));
        out.push_back(x.get<double>());
      }
    }
  }
  void read(const char* key, std::array<double, 2>& out) {
    std::vector<double> v;
    const bool present = j_.contains(key);
    read(key, v);
    if (present && v.size() != 2) throw ConfigError(type_error(full(key), "a pair [x, y]"));
    if (present) out = {v[0], v[1]};
  }

  template <class Fn>
  void section(const char* key, Fn&& fn) {
    if (const json* v = take(key)) {
      Section sub(*v, full(key));
      fn(sub);
      sub.finish();
    }
  }

  void finish() const {
    for (const auto& item : j_.items()) {
      if (!seen_.count(item.key())) throw ConfigError("unknown config key '" + full(item.key().c_str()) + "'");
    }
  }

 private:
  const json* take(const char* key) {
    seen_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }
  std::string name() const { return path_.empty() ? "<root>" : path_; }
  std::string full(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

}  // namespace

void RunConfig::validate() const {
  if (schema_version != kSchemaVersion) {
    throw ConfigError("unsupported schema_version " + std::to_string(schema_version));
  }
  auto positive = [](double x, const char* what) {
    if (!(x > 0.0)) throw ConfigError(std::string(what) + " must be > 0");
  };
  try {
    quadrature.validate();
    characteristic_quadrature().validate();
    sup_search.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  if (!(characteristic.r_max >= 1.0)) throw ConfigError("characteristic.r_max must be >= 1");
  if (characteristic.samples < 2) throw ConfigError("characteristic.samples must be >= 2");
  if (!(characteristic.max_grid_ratio > 1.0)) throw ConfigError("characteristic.max_grid_ratio must be > 1");
  if (field.grid < 2) throw ConfigError("field.grid must be >= 2");
  if (cube.d < 1 || cube.N < 1 || cube.s < 1 || cube.s > cube.N) {
    throw ConfigError("cube needs d >= 1 and 1 <= s <= N");
  }
  if (shift.D < 1 || shift.eps_cells < 1 || shift.resolution < shift.eps_cells) {
    throw ConfigError("shift needs D >= 1 and 1 <= eps_cells <= resolution");
  }
  if (residual.eps_cells < 1 || residual.resolution < residual.eps_cells) {
    throw ConfigError("residual needs 1 <= eps_cells <= resolution");
  }
  for (int n : shift.windows) if (n < 1) throw ConfigError("shift.windows entries must be >= 1");
  for (int n : residual.windows) if (n < 1) throw ConfigError("residual.windows entries must be >= 1");
  if (residual.fixedpoint_max < 1) throw ConfigError("residual.fixedpoint_max must be >= 1");
  if (formula.N < 1 || formula.deg < 1 || formula.n < 0) {
    throw ConfigError("formula needs N >= 1, deg >= 1, n >= 0");
  }
  positive(helmholtz.lambda, "helmholtz.lambda");
  positive(helmholtz.residual_lambda, "helmholtz.residual_lambda");
  if (helmholtz.h_list.size() < 2) throw ConfigError("helmholtz.h_list needs >= 2 spacings");
  for (double h : helmholtz.h_list) positive(h, "helmholtz.h_list entries");
  positive(helmholtz.barrier.R, "helmholtz.barrier.R");
  positive(helmholtz.barrier.h, "helmholtz.barrier.h");
  positive(helmholtz.barrier.c, "helmholtz.barrier.c");
}

numerics::QuadratureConfig RunConfig::characteristic_quadrature() const {
  numerics::QuadratureConfig q = quadrature;
  q.abs_tol = characteristic.abs_tol;
  q.rel_tol = characteristic.rel_tol;
  return q;
}

numerics::SupSearchConfig RunConfig::seeded_sup_search() const {
  numerics::SupSearchConfig s = sup_search;
  s.seed = seed;
  return s;
}

RunConfig parse_config(const nlohmann::json& j) {
  RunConfig cfg;
  Section root(j, "");
  if (!j.contains("schema_version")) throw ConfigError("config needs a schema_version field");
  root.read("schema_version", cfg.schema_version);
  if (cfg.schema_version != kSchemaVersion) {
    throw ConfigError("unsupported schema_version " + std::to_string(cfg.schema_version));
  }
  root.read("seed", cfg.seed);
  root.section("quadrature", [&](Section& s) {
    s.read("abs_tol", cfg.quadrature.abs_tol);
    s.read("rel_tol", cfg.quadrature.rel_tol);
    s.read("max_subdivisions", cfg.quadrature.max_subdivisions);
  });
  root.section("sup_search", [&](Section& s) {
    s.read("initial_grid", cfg.sup_search.initial_grid);
    s.read("refinement_levels", cfg.sup_search.refinement_levels);
    s.read("shrink_factor", cfg.sup_search.shrink_factor);
    s.read("restarts", cfg.sup_search.restarts);
  });
  root.section("characteristic", [&](Section& s) {
    s.read("r_max", cfg.characteristic.r_max);
    s.read("samples", cfg.characteristic.samples);
    s.read("abs_tol", cfg.characteristic.abs_tol);
    s.read("rel_tol", cfg.characteristic.rel_tol);
    s.read("max_grid_ratio", cfg.characteristic.max_grid_ratio);
  });
  root.section("field", [&](Section& s) { s.read("grid", cfg.field.grid); });
  root.section("cube", [&](Section& s) {
    s.read("d", cfg.cube.d);
    s.read("N", cfg.cube.N);
    s.read("s", cfg.cube.s);
  });
  root.section("shift", [&](Section& s) {
    s.read("D", cfg.shift.D);
    s.read("eps_cells", cfg.shift.eps_cells);
    s.read("resolution", cfg.shift.resolution);
    s.read("windows", cfg.shift.windows);
  });
  root.section("residual", [&](Section& s) {
    s.read("eps_cells", cfg.residual.eps_cells);
    s.read("resolution", cfg.residual.resolution);
    s.read("windows", cfg.residual.windows);
    s.read("fixedpoint_max", cfg.residual.fixedpoint_max);
  });
  root.section("formula", [&](Section& s) {
    s.read("N", cfg.formula.N);
    s.read("deg", cfg.formula.deg);
    s.read("n", cfg.formula.n);
  });
  root.section("helmholtz", [&](Section& s) {
    s.read("lambda", cfg.helmholtz.lambda);
    s.read("radii", cfg.helmholtz.radii);
    s.read("residual_lambda", cfg.helmholtz.residual_lambda);
    s.read("residual_point", cfg.helmholtz.residual_point);
    s.read("h_list", cfg.helmholtz.h_list);
    s.section("barrier", [&](Section& b) {
      b.read("R", cfg.helmholtz.barrier.R);
      b.read("h", cfg.helmholtz.barrier.h);
      b.read("c", cfg.helmholtz.barrier.c);
    });
  });
  root.section("output", [&](Section& s) {
    s.read("dir", cfg.output.dir);
    s.read("json", cfg.output.json);
    s.read("csv", cfg.output.csv);
  });
  root.finish();
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

nlohmann::ordered_json config_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["schema_version"] = cfg.schema_version;
  j["seed"] = cfg.seed;
  j["quadrature"] = {{"abs_tol", cfg.quadrature.abs_tol},
                     {"rel_tol", cfg.quadrature.rel_tol},
                     {"max_subdivisions", cfg.quadrature.max_subdivisions}};
  j["sup_search"] = {{"initial_grid", cfg.sup_search.initial_grid},
                     {"refinement_levels", cfg.sup_search.refinement_levels},
                     {"shrink_factor", cfg.sup_search.shrink_factor},
                     {"restarts", cfg.sup_search.restarts}};
  j["characteristic"] = {{"r_max", cfg.characteristic.r_max},
                         {"samples", cfg.characteristic.samples},
                         {"abs_tol", cfg.characteristic.abs_tol},
                         {"rel_tol", cfg.characteristic.rel_tol},
                         {"max_grid_ratio", cfg.characteristic.max_grid_ratio}};
  j["field"] = {{"grid", cfg.field.grid}};
  j["cube"] = {{"d", cfg.cube.d}, {"N", cfg.cube.N}, {"s", cfg.cube.s}};
  j["shift"] = {{"D", cfg.shift.D},
                {"eps_cells", cfg.shift.eps_cells},
                {"resolution", cfg.shift.resolution},
                {"windows", cfg.shift.windows}};
  j["residual"] = {{"eps_cells", cfg.residual.eps_cells},
                   {"resolution", cfg.residual.resolution},
                   {"windows", cfg.residual.windows},
                   {"fixedpoint_max", cfg.residual.fixedpoint_max}};
  j["formula"] = {{"N", cfg.formula.N}, {"deg", cfg.formula.deg}, {"n", cfg.formula.n}};
  j["helmholtz"] = {{"lambda", cfg.helmholtz.lambda},
                    {"radii", cfg.helmholtz.radii},
                    {"residual_lambda", cfg.helmholtz.residual_lambda},
                    {"residual_point", cfg.helmholtz.residual_point},
                    {"h_list", cfg.helmholtz.h_list},
                    {"barrier",
                     {{"R", cfg.helmholtz.barrier.R},
                      {"h", cfg.helmholtz.barrier.h},
                      {"c", cfg.helmholtz.barrier.c}}}};
  j["output"] = {{"dir", cfg.output.dir}, {"json", cfg.output.json}, {"csv", cfg.output.csv}};
  return j;
}

}  // namespace meandim::app
