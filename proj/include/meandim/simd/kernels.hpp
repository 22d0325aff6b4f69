#pragma once

// Data-parallel inner loops. Every kernel exists as a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant. The dispatching entry
// points in namespace meandim::simd pick the variant once per process (see
// dispatch.hpp); the per-ISA namespaces are public so tests can compare them.

#include <cstddef>
#include <span>
#include <string_view>

namespace meandim::simd {

enum class Level { scalar, avx2 };

std::string_view to_string(Level level) noexcept;

/// Coefficients for the batched Brody energy density.
///
/// The Weierstrass function is written p(w) = N(w) / w^2 with
/// N(w) = 1 + sum_{k>=2} c_k w^(2k), and p'(w) = D(w) / w^3. For a curve
/// f = alpha * p the energy density |df|^2 = |f'|^2 / (pi (1 + |f|^2)^2)
/// becomes (alpha^2/pi) |D|^2 |w|^2 / (|w|^4 + alpha^2 |N|^2)^2, which is
/// finite at w = 0 and needs no chart switch.
struct EnergyKernelParams {
  std::span<const double> laurent;  // c_2, c_3, ..., c_K (real invariants only)
  double alpha_squared = 1.0;
};

/// One application of the 5-point operator (-Laplace_h + c) to a padded
/// n x n row-major grid: rows/columns 0 and n-1 are read as neighbours but
/// never written. out(i,j) = (4u - u_W - u_E - u_S - u_N) * inv_h2 + c * u.
struct StencilArgs {
  std::span<const double> u;
  std::span<double> out;
  std::size_t n = 0;
  double inv_h2 = 1.0;
  double c = 0.0;
};

namespace scalar {
void energy_density(std::span<const double> w_re, std::span<const double> w_im,
                    std::span<double> out, const EnergyKernelParams& params);
void helmholtz_apply(const StencilArgs& args);
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
double max_abs(std::span<const double> x);
}  // namespace scalar

#if MEANDIM_HAVE_AVX2
namespace avx2 {
void energy_density(std::span<const double> w_re, std::span<const double> w_im,
                    std::span<double> out, const EnergyKernelParams& params);
void helmholtz_apply(const StencilArgs& args);
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
double max_abs(std::span<const double> x);
}  // namespace avx2
#endif

// Dispatching entry points.
void energy_density(std::span<const double> w_re, std::span<const double> w_im,
                    std::span<double> out, const EnergyKernelParams& params);
void helmholtz_apply(const StencilArgs& args);
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
double max_abs(std::span<const double> x);

}  // namespace meandim::simd
