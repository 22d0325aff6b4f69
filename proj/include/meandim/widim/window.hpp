#pragma once

#include <string>
#include <vector>

#include "meandim/widim/cover.hpp"

namespace meandim::widim {

enum class WindowKind { full_shift, residual };

/// Length-n window of ([0,1]^D)^Z under the sup metric (full_shift), or of
/// the residual system X = union of F_m, F_m = [0,1/m]^m (residual).
struct WindowSystem {
  WindowKind kind = WindowKind::full_shift;
  int D = 1;
  int n = 1;

  void validate() const;
};

std::string to_string(WindowKind kind);

/// Cover instance of the window with mesh eps_cells on a grid of
/// `resolution` cells per unit length (so eps = eps_cells / resolution).
/// full_shift: the cube d = D n, N = resolution, s = eps_cells.
/// residual: d = n with one component per m = 1..n, the box
/// [0, ceil(N/m)]^m x [0, 1]^(n-m).
CoverInstance window_instance(const WindowSystem& sys, int eps_cells, int resolution);

enum class CoverMethod { exact, brick, product, union_bound };

std::string to_string(CoverMethod method);

struct WindowBound {
  int n = 0;
  int widim_bound = 0;
  double ratio = 0.0;  // widim_bound / n
  CoverMethod method = CoverMethod::exact;
  bool upper_bound_only = false;  // true unless the exact search finished
  CoverSolution solution;
};

/// Best available cover of one window: exact search when it fits the
/// candidate limit, otherwise a flagged constructive upper bound.
WindowBound window_bound(const WindowSystem& sys, int eps_cells, int resolution);

/// Per-window Widim bounds and ratios for each n in n_list.
std::vector<WindowBound> mean_dim_slope(const WindowSystem& sys, int eps_cells, int resolution,
                                        const std::vector<int>& n_list);

/// Cover of a residual window: components of side <= s share the box
/// [0, s]^n; larger ones get their own cube cover lifted by [0, 1] factors,
/// minus boxes already inside a kept box. The multiplicity is that of the
/// assembled cover, at most the sum of the parts.
CoverSolution residual_union_cover(const CoverInstance& inst);

/// dim F_n = n. For n <= 2 the cube value is confirmed by exact search on
/// [0,3]^n with s = 2 (multiplicity n + 1); a mismatch throws Error.
int residual_fixedpoint_dim(int n);

}  // namespace meandim::widim
