#pragma once

#include <cstddef>
#include <vector>

#include "meandim/core.hpp"

namespace meandim::widim {

/// Closed integer interval [lo, hi].
struct Interval {
  int lo = 0;
  int hi = 0;

  int length() const noexcept { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Closed grid-aligned box, one interval per axis.
struct Box {
  std::vector<Interval> axes;

  std::size_t dimension() const noexcept { return axes.size(); }
  bool contains(const Box& other) const noexcept;
  bool operator==(const Box&) const = default;
};

Box cube(int d, int lo, int hi);

/// Universe: [0, N]^d, or the union of `components` (boxes inside [0, N]^d)
/// when that list is non-empty. Admissible sets are closed boxes in [0, N]^d
/// whose every side has integer length in [1, s].
struct CoverInstance {
  int d = 1;
  int N = 1;
  int s = 1;
  std::vector<Box> components;

  /// Throws InvalidArgument on d < 1, s outside [1, N], or a component that
  /// is not a full-dimensional box inside [0, N]^d.
  void validate() const;

  bool admissible(const Box& box) const noexcept;
};

struct CoverSolution {
  std::vector<Box> boxes;
  int multiplicity = 0;  // max number of chosen boxes sharing a point of the universe
  int widim_bound = 0;   // multiplicity - 1
};

struct CoverCheck {
  bool admissible = false;  // every box admissible
  bool covers = false;      // every unit cell of the universe lies in some box
  int multiplicity = 0;
};

/// Exact coverage and multiplicity of a box family. Boxes meet when their
/// closed intervals overlap on every axis, so the maximum is attained at an
/// integer point and is found by counting over lattice points.
CoverCheck verify_cover(const CoverInstance& inst, const std::vector<Box>& boxes);

/// Builds a CoverSolution from boxes after checking them; throws Error if
/// they are inadmissible or miss part of the universe.
CoverSolution make_solution(const CoverInstance& inst, std::vector<Box> boxes);

inline constexpr std::size_t kMaxCandidates = 40;

/// Admissible boxes meeting the universe in at least one unit cell, in
/// lexicographic order.
std::vector<Box> candidate_boxes(const CoverInstance& inst);

/// Exact minimum multiplicity over covers by admissible boxes. Branches on
/// the first uncovered cell over the candidates containing it and prunes any
/// branch whose multiplicity reaches the best found. Throws SizeError when
/// there are more than kMaxCandidates candidates.
CoverSolution min_multiplicity_cover(const CoverInstance& inst);

}  // namespace meandim::widim
