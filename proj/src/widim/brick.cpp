#include "meandim/widim/brick.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace meandim::widim {
namespace {

void check_args(int d, int N, int s) {
  if (d < 1) throw InvalidArgument("dimension must be >= 1");
  if (s < 1) throw InvalidArgument("max side s must be >= 1");
  if (N < s) throw InvalidArgument("grid extent N must be >= s");
}

// Clips [a, a + s]^d to [0, N]^d; false if the result is not full-dimensional.
bool clipped(const std::vector<int>& anchor, int N, int s, Box& out) {
  out.axes.clear();
  for (int a : anchor) {
    const Interval iv{std::max(0, a), std::min(N, a + s)};
    if (iv.length() < 1) return false;
    out.axes.push_back(iv);
  }
  return true;
}

void for_each_anchor(int d, int N, int s, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> a(static_cast<std::size_t>(d), 1 - s);
  while (true) {
    fn(a);
    std::size_t k = a.size();
    while (k > 0) {
      if (++a[k - 1] <= N - 1) break;
      a[k - 1] = 1 - s;
      --k;
    }
    if (k == 0) return;
  }
}

}  // namespace

CoverSolution brick_cover(int d, int N, int s) {
  check_args(d, N, s);
  if (s < 2) throw InvalidArgument("bricks need max side s >= 2");
  if (d > 3) throw InvalidArgument("brick_cover supports d <= 3; use product_cover");
  long modulus = d == 1 ? s : 1;
  if (d > 1) {
    for (int k = 0; k < d; ++k) modulus *= s;
    modulus -= 1;
  }
  std::vector<Box> boxes;
  Box b;
  for_each_anchor(d, N, s, [&](const std::vector<int>& a) {
    long key = 0;
    long weight = 1;
    for (int x : a) {
      key += weight * x;
      weight *= s;
    }
    if (((key % modulus) + modulus) % modulus != 0) return;
    if (clipped(a, N, s, b)) boxes.push_back(b);
  });
  const CoverInstance inst{d, N, s, {}};
  CoverSolution solution = make_solution(inst, std::move(boxes));
  if (N > s && solution.multiplicity != d + 1) {
    throw Error("brick construction reached multiplicity " +
                std::to_string(solution.multiplicity) + " instead of " + std::to_string(d + 1));
  }
  return solution;
}

CoverSolution product_cover(int d, int N, int s) {
  check_args(d, N, s);
  std::vector<Box> boxes;
  Box b;
  for_each_anchor(d, N, s, [&](const std::vector<int>& a) {
    const bool aligned = std::all_of(a.begin(), a.end(), [s](int x) { return x >= 0 && x % s == 0; });
    if (aligned && clipped(a, N, s, b)) boxes.push_back(b);
  });
  return make_solution(CoverInstance{d, N, s, {}}, std::move(boxes));
}

}  // namespace meandim::widim
