#include "meandim/widim/window.hpp"

#include <algorithm>
#include <string>

#include "meandim/widim/brick.hpp"

namespace meandim::widim {

void WindowSystem::validate() const {
  if (n < 1) throw InvalidArgument("window length n must be >= 1");
  if (D < 1) throw InvalidArgument("full-shift dimension D must be >= 1");
}

std::string to_string(WindowKind kind) {
  return kind == WindowKind::full_shift ? "full_shift" : "residual";
}

std::string to_string(CoverMethod method) {
  switch (method) {
    case CoverMethod::exact: return "exact";
    case CoverMethod::brick: return "brick";
    case CoverMethod::product: return "product";
    case CoverMethod::union_bound: return "union";
  }
  return "unknown";
}

CoverInstance window_instance(const WindowSystem& sys, int eps_cells, int resolution) {
  sys.validate();
  if (eps_cells < 1) throw InvalidArgument("eps_cells must be >= 1");
  if (resolution < eps_cells) throw InvalidArgument("resolution must be >= eps_cells");
  if (sys.kind == WindowKind::full_shift) {
    CoverInstance inst{sys.D * sys.n, resolution, eps_cells, {}};
    inst.validate();
    return inst;
  }
  CoverInstance inst{sys.n, resolution, eps_cells, {}};
  for (int m = 1; m <= sys.n; ++m) {
    const int side = (resolution + m - 1) / m;
    Box c;
    for (int k = 0; k < sys.n; ++k) c.axes.push_back(k < m ? Interval{0, side} : Interval{0, 1});
    inst.components.push_back(std::move(c));
  }
  inst.validate();
  return inst;
}

namespace {

// Cover of the cube [0, side]^m with the given max side, best method first.
std::pair<CoverSolution, CoverMethod> cube_cover(int m, int side, int s) {
  const CoverInstance inst{m, side, std::min(s, side), {}};
  try {
    return {min_multiplicity_cover(inst), CoverMethod::exact};
  } catch (const SizeError&) {
  }
  if (m <= 3 && inst.s >= 2) return {brick_cover(m, side, inst.s), CoverMethod::brick};
  return {product_cover(m, side, inst.s), CoverMethod::product};
}

}  // namespace

CoverSolution residual_union_cover(const CoverInstance& inst) {
  inst.validate();
  std::vector<Box> boxes;
  std::vector<std::pair<int, int>> large;  // (m, side)
  bool any_small = false;
  for (const Box& c : inst.components) {
    int m = 0;
    while (m < inst.d && c.axes[static_cast<std::size_t>(m)].length() > 1) ++m;
    const int side = m == 0 ? 1 : c.axes[0].length();
    if (side <= inst.s) {
      any_small = true;
    } else {
      large.emplace_back(m, side);
    }
  }
  if (any_small) boxes.push_back(cube(inst.d, 0, inst.s));
  for (const auto& [m, side] : large) {
    const CoverSolution part = cube_cover(m, side, inst.s).first;
    for (const Box& b : part.boxes) {
      Box lifted = b;
      for (int k = m; k < inst.d; ++k) lifted.axes.push_back({0, 1});
      const bool redundant = std::any_of(boxes.begin(), boxes.end(),
                                         [&](const Box& kept) { return kept.contains(lifted); });
      if (!redundant) boxes.push_back(std::move(lifted));
    }
  }
  return make_solution(inst, std::move(boxes));
}

WindowBound window_bound(const WindowSystem& sys, int eps_cells, int resolution) {
  const CoverInstance inst = window_instance(sys, eps_cells, resolution);
  WindowBound out;
  out.n = sys.n;
  try {
    out.solution = min_multiplicity_cover(inst);
    out.method = CoverMethod::exact;
  } catch (const SizeError&) {
    out.upper_bound_only = true;
    if (sys.kind == WindowKind::residual) {
      out.solution = residual_union_cover(inst);
      out.method = CoverMethod::union_bound;
    } else {
      auto [solution, method] = cube_cover(inst.d, inst.N, inst.s);
      out.solution = std::move(solution);
      out.method = method;
    }
  }
  out.widim_bound = out.solution.widim_bound;
  out.ratio = static_cast<double>(out.widim_bound) / sys.n;
  return out;
}

std::vector<WindowBound> mean_dim_slope(const WindowSystem& sys, int eps_cells, int resolution,
                                        const std::vector<int>& n_list) {
  std::vector<WindowBound> rows;
  for (int n : n_list) {
    WindowSystem w = sys;
    w.n = n;
    rows.push_back(window_bound(w, eps_cells, resolution));
  }
  return rows;
}

int residual_fixedpoint_dim(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (n <= 2) {
    const CoverSolution sol = min_multiplicity_cover(CoverInstance{n, 3, 2, {}});
    if (sol.multiplicity != n + 1) {
      throw Error("cube cover search disagrees with dim F_n = n at n = " + std::to_string(n));
    }
  }
  return n;
}

}  // namespace meandim::widim
