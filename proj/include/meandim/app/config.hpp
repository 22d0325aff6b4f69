#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "meandim/core.hpp"
#include "meandim/numerics/quadrature.hpp"
#include "meandim/numerics/sup_search.hpp"

namespace meandim::app {

inline constexpr int kSchemaVersion = 1;

/// Bad config file, unknown key, or bad flag value (exit code 2).
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct CharacteristicSettings {
  double r_max = 50.0;
  int samples = 16;
  double abs_tol = 1e-8;
  double rel_tol = 1e-8;
  double max_grid_ratio = 1.01;
};

struct FieldSettings {
  int grid = 48;  // |df| samples per axis over the fundamental box
};

struct CubeSettings {
  int d = 2;
  int N = 3;
  int s = 2;
};

struct ShiftSettings {
  int D = 1;
  int eps_cells = 2;
  int resolution = 3;
  std::vector<int> windows{1, 2, 3};
};

struct ResidualSettings {
  int eps_cells = 2;
  int resolution = 4;
  std::vector<int> windows{1, 2, 3, 4};
  int fixedpoint_max = 7;
};

struct FormulaSettings {
  int N = 1;
  int deg = 2;
  int n = 3;
};

struct BarrierSettings {
  double R = 4.0;
  double h = 0.125;
  double c = 1.0;
};

struct HelmholtzSettings {
  double lambda = 1.0;
  std::vector<double> radii{0.0, 0.5, 1.0, 2.0, 4.0};
  double residual_lambda = 2.0;
  std::array<double, 2> residual_point{1.0, 1.0};
  std::vector<double> h_list{0.1, 0.05, 0.025};
  BarrierSettings barrier;
};

struct OutputSettings {
  std::string dir;  // empty: no files
  bool json = false;
  bool csv = false;
};

struct RunConfig {
  int schema_version = kSchemaVersion;
  std::uint64_t seed = 1;
  numerics::QuadratureConfig quadrature;
  numerics::SupSearchConfig sup_search;
  CharacteristicSettings characteristic;
  FieldSettings field;
  CubeSettings cube;
  ShiftSettings shift;
  ResidualSettings residual;
  FormulaSettings formula;
  HelmholtzSettings helmholtz;
  OutputSettings output;

  /// Throws ConfigError on non-positive tolerances and other bad values.
  void validate() const;

  numerics::QuadratureConfig characteristic_quadrature() const;
  numerics::SupSearchConfig seeded_sup_search() const;
};

/// Parses a config document; every key is optional, unknown keys and a
/// missing or different schema_version are rejected.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Full document with every field; parse_config(config_json(c)) == c.
nlohmann::ordered_json config_json(const RunConfig& cfg);

}  // namespace meandim::app
