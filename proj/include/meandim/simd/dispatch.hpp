#pragma once

#include "meandim/simd/kernels.hpp"

namespace meandim::simd {

/// Best level the running CPU supports (and this build contains).
Level detected_level() noexcept;

/// Level the dispatching kernels use. Defaults to detected_level(), unless
/// MEANDIM_LAB_SIMD=scalar is set in the environment.
Level active_level() noexcept;

/// Forces a level; requests above detected_level() are clamped.
void set_active_level(Level level) noexcept;

/// Restores a previous level on scope exit.
class ScopedLevel {
 public:
  explicit ScopedLevel(Level level) : saved_(active_level()) { set_active_level(level); }
  ~ScopedLevel() { set_active_level(saved_); }
  ScopedLevel(const ScopedLevel&) = delete;
  ScopedLevel& operator=(const ScopedLevel&) = delete;

 private:
  Level saved_;
};

}  // namespace meandim::simd
