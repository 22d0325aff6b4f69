#pragma once

#include <cstdint>

#include "meandim/core.hpp"
#include "meandim/numerics/quadrature.hpp"

namespace meandim::numerics {

struct SupSearchConfig {
  int initial_grid = 96;        // samples per axis, edges included
  int refinement_levels = 48;   // shrink steps of the local pattern
  double shrink_factor = 0.5;   // in (0, 1)
  int restarts = 8;             // local searches started from stratified grid maxima
  std::uint64_t seed = 1;

  void validate() const;
};

struct SupResult {
  double value = 0.0;
  Complex argmax{};
  double spacing = 0.0;  // final local step length
  long evaluations = 0;
};

/// Best sampled value of g over the closed rectangle: a coarse grid pass,
/// then pattern refinement from the best grid point of each stratum. Every
/// reported value is an actual sample, so it never exceeds the true sup.
SupResult sup_search(const FieldFunction& g, const Rect& domain, const SupSearchConfig& cfg);
SupResult sup_search(const ScalarField& g, const Rect& domain, const SupSearchConfig& cfg);

}  // namespace meandim::numerics
