#include "meandim/widim/serialize.hpp"

namespace meandim::widim {

void to_json(nlohmann::json& j, const Box& box) {
  j = nlohmann::json::array();
  for (const Interval& iv : box.axes) j.push_back({iv.lo, iv.hi});
}

void from_json(const nlohmann::json& j, Box& box) {
  box.axes.clear();
  for (const auto& iv : j) {
    if (!iv.is_array() || iv.size() != 2) throw InvalidArgument("box axis must be [lo, hi]");
    box.axes.push_back({iv.at(0).get<int>(), iv.at(1).get<int>()});
  }
}

void to_json(nlohmann::json& j, const CoverInstance& inst) {
  j = {{"d", inst.d}, {"N", inst.N}, {"s", inst.s}, {"components", inst.components}};
}

void from_json(const nlohmann::json& j, CoverInstance& inst) {
  inst.d = j.at("d").get<int>();
  inst.N = j.at("N").get<int>();
  inst.s = j.at("s").get<int>();
  inst.components.clear();
  if (j.contains("components")) inst.components = j.at("components").get<std::vector<Box>>();
  inst.validate();
}

nlohmann::json solution_json(const CoverInstance& inst, const CoverSolution& sol) {
  nlohmann::json j = inst;
  j["boxes"] = sol.boxes;
  j["multiplicity"] = sol.multiplicity;
  j["widim_bound"] = sol.widim_bound;
  return j;
}

std::pair<CoverInstance, CoverSolution> solution_from_json(const nlohmann::json& j) {
  CoverInstance inst = j.get<CoverInstance>();
  CoverSolution sol = make_solution(inst, j.at("boxes").get<std::vector<Box>>());
  if (sol.multiplicity != j.at("multiplicity").get<int>()) {
    throw Error("stored multiplicity does not match the boxes");
  }
  return {std::move(inst), std::move(sol)};
}

}  // namespace meandim::widim
