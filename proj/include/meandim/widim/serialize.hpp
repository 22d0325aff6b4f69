#pragma once

#include <json.hpp>

#include "meandim/widim/cover.hpp"
#include "meandim/widim/window.hpp"

namespace meandim::widim {

// Boxes are lists of [lo, hi] integer pairs, one per axis.
void to_json(nlohmann::json& j, const Box& box);
void from_json(const nlohmann::json& j, Box& box);

// {"d", "N", "s", "components"}
void to_json(nlohmann::json& j, const CoverInstance& inst);
void from_json(const nlohmann::json& j, CoverInstance& inst);

// {"d", "N", "s", "boxes", "multiplicity", "widim_bound"}
nlohmann::json solution_json(const CoverInstance& inst, const CoverSolution& sol);

/// Parses solution_json output and re-verifies it against its instance.
std::pair<CoverInstance, CoverSolution> solution_from_json(const nlohmann::json& j);

}  // namespace meandim::widim
