#include "meandim/widim/cover.hpp"

#include <algorithm>
#include <string>

#include "grid.hpp"

namespace meandim::widim {

bool Box::contains(const Box& other) const noexcept {
  if (other.axes.size() != axes.size()) return false;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    if (other.axes[k].lo < axes[k].lo || other.axes[k].hi > axes[k].hi) return false;
  }
  return true;
}

Box cube(int d, int lo, int hi) {
  return Box{std::vector<Interval>(static_cast<std::size_t>(d), Interval{lo, hi})};
}

void CoverInstance::validate() const {
  if (d < 1) throw InvalidArgument("cover dimension must be >= 1");
  if (N < 1) throw InvalidArgument("grid extent N must be >= 1");
  if (s < 1 || s > N) throw InvalidArgument("max side s must lie in [1, N]");
  const Box universe = cube(d, 0, N);
  for (const Box& c : components) {
    if (c.dimension() != static_cast<std::size_t>(d) || !universe.contains(c)) {
      throw InvalidArgument("component must be a box inside [0, N]^d");
    }
    for (const Interval& iv : c.axes) {
      if (iv.length() < 1) throw InvalidArgument("component sides must be >= 1");
    }
  }
}

bool CoverInstance::admissible(const Box& box) const noexcept {
  if (box.dimension() != static_cast<std::size_t>(d)) return false;
  for (const Interval& iv : box.axes) {
    if (iv.lo < 0 || iv.hi > N || iv.length() < 1 || iv.length() > s) return false;
  }
  return true;
}

CoverCheck verify_cover(const CoverInstance& inst, const std::vector<Box>& boxes) {
  inst.validate();
  const detail::Grid grid(inst);
  CoverCheck check;
  check.admissible = std::all_of(boxes.begin(), boxes.end(),
                                 [&](const Box& b) { return inst.admissible(b); });
  std::vector<int> cell_hits(grid.cell_count(), 0);
  std::vector<int> point_hits(grid.point_count(), 0);
  for (const Box& b : boxes) {
    if (b.dimension() != static_cast<std::size_t>(inst.d)) continue;
    grid.for_each_cell(b, [&](std::size_t c) { ++cell_hits[c]; });
    grid.for_each_point(b, [&](std::size_t p) { ++point_hits[p]; });
  }
  check.covers = true;
  for (std::size_t c = 0; c < cell_hits.size(); ++c) {
    if (grid.cell_in_universe(c) && cell_hits[c] == 0) {
      check.covers = false;
      break;
    }
  }
  for (std::size_t p = 0; p < point_hits.size(); ++p) {
    if (grid.point_in_universe(p)) check.multiplicity = std::max(check.multiplicity, point_hits[p]);
  }
  return check;
}

CoverSolution make_solution(const CoverInstance& inst, std::vector<Box> boxes) {
  const CoverCheck check = verify_cover(inst, boxes);
  if (!check.admissible) throw Error("cover contains an inadmissible box");
  if (!check.covers) throw Error("boxes do not cover the universe");
  return {std::move(boxes), check.multiplicity, check.multiplicity - 1};
}

std::vector<Box> candidate_boxes(const CoverInstance& inst) {
  inst.validate();
  const detail::Grid grid(inst);
  // Per-axis intervals in lexicographic order; boxes are their products.
  std::vector<Interval> intervals;
  for (int lo = 0; lo < inst.N; ++lo) {
    for (int hi = lo + 1; hi <= std::min(inst.N, lo + inst.s); ++hi) intervals.push_back({lo, hi});
  }
  std::vector<Box> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(inst.d), 0);
  while (true) {
    Box b;
    for (std::size_t k : idx) b.axes.push_back(intervals[k]);
    bool meets = false;
    grid.for_each_cell(b, [&](std::size_t c) { meets = meets || grid.cell_in_universe(c); });
    if (meets) out.push_back(std::move(b));
    std::size_t k = idx.size();
    while (k > 0 && ++idx[k - 1] == intervals.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

namespace {

class Search {
 public:
  Search(const detail::Grid& grid, const std::vector<Box>& candidates)
      : grid_(grid), candidates_(candidates) {
    for (std::size_t c = 0; c < grid.cell_count(); ++c) {
      if (grid.cell_in_universe(c)) cells_.push_back(c);
    }
    cell_hits_.assign(grid.cell_count(), 0);
    point_hits_.assign(grid.point_count(), 0);
    boxes_cells_.resize(candidates.size());
    boxes_points_.resize(candidates.size());
    by_cell_.resize(grid.cell_count());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      grid.for_each_cell(candidates[i], [&](std::size_t c) {
        boxes_cells_[i].push_back(c);
        by_cell_[c].push_back(i);
      });
      grid.for_each_point(candidates[i], [&](std::size_t p) {
        if (grid.point_in_universe(p)) boxes_points_[i].push_back(p);
      });
    }
    // Every candidate at once is a cover; its multiplicity + 1 bounds the search.
    best_ = static_cast<int>(candidates.size()) + 1;
  }

  std::vector<std::size_t> run() {
    descend(0, 0);
    return best_set_;
  }

  int best() const noexcept { return best_; }

 private:
  void descend(std::size_t first, int current) {
    while (first < cells_.size() && cell_hits_[cells_[first]] > 0) ++first;
    if (first == cells_.size()) {
      if (current < best_) {
        best_ = current;
        best_set_ = chosen_;
      }
      return;
    }
    for (std::size_t i : by_cell_[cells_[first]]) {
      int next = current;
      for (std::size_t p : boxes_points_[i]) next = std::max(next, point_hits_[p] + 1);
      if (next >= best_) continue;
      apply(i, +1);
      chosen_.push_back(i);
      descend(first + 1, next);
      chosen_.pop_back();
      apply(i, -1);
    }
  }

  void apply(std::size_t i, int delta) {
    for (std::size_t c : boxes_cells_[i]) cell_hits_[c] += delta;
    for (std::size_t p : boxes_points_[i]) point_hits_[p] += delta;
  }

  const detail::Grid& grid_;
  const std::vector<Box>& candidates_;
  std::vector<std::size_t> cells_;
  std::vector<int> cell_hits_;
  std::vector<int> point_hits_;
  std::vector<std::vector<std::size_t>> boxes_cells_;
  std::vector<std::vector<std::size_t>> boxes_points_;
  std::vector<std::vector<std::size_t>> by_cell_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_set_;
  int best_;
};

}  // namespace

CoverSolution min_multiplicity_cover(const CoverInstance& inst) {
  std::vector<Box> candidates = candidate_boxes(inst);
  if (candidates.size() > kMaxCandidates) {
    throw SizeError("exact cover search needs " + std::to_string(candidates.size()) +
                    " candidate boxes (limit " + std::to_string(kMaxCandidates) + ")");
  }
  const detail::Grid grid(inst);
  Search search(grid, candidates);
  const std::vector<std::size_t> chosen = search.run();
  std::vector<Box> boxes;
  for (std::size_t i : chosen) boxes.push_back(candidates[i]);
  CoverSolution solution = make_solution(inst, std::move(boxes));
  if (solution.multiplicity != search.best()) throw Error("cover search bookkeeping mismatch");
  return solution;
}

}  // namespace meandim::widim
