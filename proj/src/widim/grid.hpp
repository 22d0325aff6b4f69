#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "meandim/widim/cover.hpp"

namespace meandim::widim::detail {

/// Integer points and unit cells of [0, N]^d, row-major, with the universe
/// mask of the instance.
class Grid {
 public:
  static constexpr std::size_t kMaxPoints = std::size_t{1} << 26;

  explicit Grid(const CoverInstance& inst) : d_(inst.d), n_(inst.N) {
    std::size_t points = 1;
    std::size_t cells = 1;
    for (int k = 0; k < d_; ++k) {
      points *= static_cast<std::size_t>(n_ + 1);
      cells *= static_cast<std::size_t>(n_);
      if (points > kMaxPoints) throw SizeError("cover grid too large to verify");
    }
    point_mask_.assign(points, inst.components.empty());
    cell_mask_.assign(cells, inst.components.empty());
    for (const Box& c : inst.components) {
      for_each_point(c, [&](std::size_t p) { point_mask_[p] = true; });
      for_each_cell(c, [&](std::size_t i) { cell_mask_[i] = true; });
    }
  }

  std::size_t point_count() const noexcept { return point_mask_.size(); }
  std::size_t cell_count() const noexcept { return cell_mask_.size(); }
  bool point_in_universe(std::size_t p) const noexcept { return point_mask_[p]; }
  bool cell_in_universe(std::size_t c) const noexcept { return cell_mask_[c]; }

  /// Integer points of the box that lie in [0, N]^d.
  template <class Fn>
  void for_each_point(const Box& b, Fn&& fn) const {
    visit(b, 0, n_ + 1, fn);
  }

  /// Unit cells (by lower corner) of the box that lie in [0, N]^d.
  template <class Fn>
  void for_each_cell(const Box& b, Fn&& fn) const {
    visit(b, 1, n_, fn);
  }

 private:
  template <class Fn>
  void visit(const Box& b, int shrink, int extent, Fn& fn) const {
    std::vector<int> lo(static_cast<std::size_t>(d_));
    std::vector<int> hi(static_cast<std::size_t>(d_));
    for (std::size_t k = 0; k < lo.size(); ++k) {
      lo[k] = std::max(0, b.axes[k].lo);
      hi[k] = std::min(extent - 1, b.axes[k].hi - shrink);
      if (lo[k] > hi[k]) return;
    }
    std::vector<int> x = lo;
    while (true) {
      std::size_t index = 0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        index = index * static_cast<std::size_t>(extent) + static_cast<std::size_t>(x[k]);
      }
      fn(index);
      std::size_t k = x.size();
      while (k > 0) {
        if (++x[k - 1] <= hi[k - 1]) break;
        x[k - 1] = lo[k - 1];
        --k;
      }
      if (k == 0) return;
    }
  }

  int d_;
  int n_;
  std::vector<bool> point_mask_;
  std::vector<bool> cell_mask_;
};

}  // namespace meandim::widim::detail
