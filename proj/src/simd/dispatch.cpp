#include "meandim/simd/dispatch.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace meandim::simd {
namespace {

Level probe() noexcept {
#if MEANDIM_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return Level::avx2;
  }
#endif
  return Level::scalar;
}

Level initial_level() noexcept {
  const Level detected = detected_level();
  if (const char* env = std::getenv("MEANDIM_LAB_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Level::scalar;
  }
  return detected;
}

std::atomic<Level>& active_slot() noexcept {
  static std::atomic<Level> slot{initial_level()};
  return slot;
}

}  // namespace

std::string_view to_string(Level level) noexcept {
  switch (level) {
    case Level::scalar: return "scalar";
    case Level::avx2: return "avx2";
  }
  return "unknown";
}

Level detected_level() noexcept {
  static const Level level = probe();
  return level;
}

Level active_level() noexcept { return active_slot().load(std::memory_order_relaxed); }

void set_active_level(Level level) noexcept {
  if (level == Level::avx2 && detected_level() != Level::avx2) level = Level::scalar;
  active_slot().store(level, std::memory_order_relaxed);
}

#if MEANDIM_HAVE_AVX2
#define MEANDIM_DISPATCH(fn, ...)                                      \
  (active_level() == Level::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define MEANDIM_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void energy_density(std::span<const double> w_re, std::span<const double> w_im,
                    std::span<double> out, const EnergyKernelParams& params) {
  MEANDIM_DISPATCH(energy_density, w_re, w_im, out, params);
}

void helmholtz_apply(const StencilArgs& args) { MEANDIM_DISPATCH(helmholtz_apply, args); }

double dot(std::span<const double> x, std::span<const double> y) {
  return MEANDIM_DISPATCH(dot, x, y);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  MEANDIM_DISPATCH(axpy, alpha, x, y);
}

double max_abs(std::span<const double> x) { return MEANDIM_DISPATCH(max_abs, x); }

#undef MEANDIM_DISPATCH

}  // namespace meandim::simd
