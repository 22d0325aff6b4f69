#include "meandim/elliptic/lattice.hpp"

#include <cmath>
#include <limits>

namespace meandim {
namespace {

double cross(Complex a, Complex b) noexcept { return (std::conj(a) * b).imag(); }

std::pair<double, double> solve(Complex a, Complex b, Complex z) noexcept {
  const double det = cross(a, b);
  return {cross(z, b) / det, cross(a, z) / det};
}

}  // namespace

Lattice::Lattice(Complex a, Complex b) : a_(a), b_(b) {
  if (!std::isfinite(std::abs(a)) || !std::isfinite(std::abs(b))) {
    throw InvalidArgument("lattice generators must be finite");
  }
  const double orientation = cross(a, b);
  if (!(std::fabs(orientation) > 1e-14 * std::abs(a) * std::abs(b))) {
    throw InvalidArgument("lattice generators are linearly dependent");
  }
  if (orientation < 0.0) throw InvalidArgument("lattice basis must be positively oriented");
  area_ = std::fabs(orientation);

  Complex u = a, v = b;
  if (std::norm(u) > std::norm(v)) std::swap(u, v);
  for (int iter = 0; iter < 64; ++iter) {
    const double mu = std::round((std::conj(u) * v).real() / std::norm(u));
    v -= mu * u;
    if (std::norm(v) >= std::norm(u)) break;
    std::swap(u, v);
  }
  ra_ = u;
  rb_ = v;
  shortest_ = std::abs(u);
}

std::pair<double, double> Lattice::coordinates(Complex z) const noexcept {
  return solve(a_, b_, z);
}

Complex Lattice::reduce(Complex z) const noexcept {
  const auto [s, t] = coordinates(z);
  const double m = std::floor(s);
  const double n = std::floor(t);
  Complex r = z - (m * a_ + n * b_);
  // Rounding can leave a coordinate at exactly 1; fold it back to 0.
  const auto [rs, rt] = coordinates(r);
  if (rs >= 1.0) r -= a_;
  if (rt >= 1.0) r -= b_;
  return r;
}

Complex Lattice::nearest_point(Complex z) const noexcept {
  const auto [s, t] = solve(ra_, rb_, z);
  const double s0 = std::round(s);
  const double t0 = std::round(t);
  Complex best{};
  double best_d = std::numeric_limits<double>::infinity();
  for (int di = -1; di <= 1; ++di) {
    for (int dj = -1; dj <= 1; ++dj) {
      const Complex p = (s0 + di) * ra_ + (t0 + dj) * rb_;
      const double d = std::norm(z - p);
      if (d < best_d) {
        best_d = d;
        best = p;
      }
    }
  }
  return best;
}

Lattice Lattice::scaled(double c) const {
  if (!(c > 0.0)) throw InvalidArgument("lattice scale must be positive");
  return Lattice(c * a_, c * b_);
}

double lattice_area(const Lattice& lattice) noexcept { return lattice.area(); }

Complex reduce_to_fundamental(const Lattice& lattice, Complex z) noexcept {
  return lattice.reduce(z);
}

}  // namespace meandim
