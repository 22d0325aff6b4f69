#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace meandim::numerics {

/// Worker count: hardware concurrency, capped by MEANDIM_LAB_THREADS when set.
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Each
/// index is independent; callers keep results in index-addressed slots and
/// reduce them afterwards in index order, so output never depends on the
/// thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace meandim::numerics
