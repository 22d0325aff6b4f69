#include "meandim/nevanlinna/characteristic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "meandim/numerics/parallel.hpp"

namespace meandim::nevanlinna {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw InvalidArgument("interpolant needs >= 2 matching nodes");
  std::vector<double> delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = x_[i + 1] - x_[i];
    if (!(h > 0.0)) throw InvalidArgument("interpolation nodes must increase strictly");
    delta[i] = (y_[i + 1] - y_[i]) / h;
  }
  slope_.assign(n, 0.0);
  slope_[0] = delta[0];
  slope_[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) continue;
    // Weighted harmonic mean keeps each piece monotone.
    const double h0 = x_[i] - x_[i - 1];
    const double h1 = x_[i + 1] - x_[i];
    const double w0 = 2.0 * h1 + h0;
    const double w1 = h1 + 2.0 * h0;
    slope_[i] = (w0 + w1) / (w0 / delta[i - 1] + w1 / delta[i]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      slope_[i] = slope_[i + 1] = 0.0;
      continue;
    }
    // End slopes: clamp into the Fritsch-Carlson region.
    const double a = slope_[i] / delta[i];
    const double b = slope_[i + 1] / delta[i];
    if (a < 0.0) slope_[i] = 0.0;
    if (b < 0.0) slope_[i + 1] = 0.0;
    const double s = a * a + b * b;
    if (s > 9.0) {
      const double tau = 3.0 / std::sqrt(s);
      slope_[i] = tau * a * delta[i];
      slope_[i + 1] = tau * b * delta[i];
    }
  }
}

double MonotoneCubic::operator()(double x) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  i = std::min(i, x_.size() - 2);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * y_[i] + (t3 - 2.0 * t2 + t) * h * slope_[i] +
         (-2.0 * t3 + 3.0 * t2) * y_[i + 1] + (t3 - t2) * h * slope_[i + 1];
}

CharacteristicProfile characteristic(const Curve& curve, double r_max, int samples,
                                     const numerics::QuadratureConfig& cfg,
                                     const CharacteristicOptions& opts) {
  if (!(r_max >= 1.0) || !std::isfinite(r_max)) throw InvalidArgument("r_max must be >= 1");
  if (samples < 2) throw InvalidArgument("samples must be >= 2");
  if (!(opts.max_grid_ratio > 1.0)) throw InvalidArgument("max_grid_ratio must be > 1");
  cfg.validate();

  CharacteristicProfile profile;
  if (r_max == 1.0) {
    profile.rows.push_back({1.0, 0.0, 0.0});
    return profile;
  }

  std::vector<double> radii(static_cast<std::size_t>(samples));
  const double log_max = std::log(r_max);
  for (int i = 0; i < samples; ++i) {
    radii[static_cast<std::size_t>(i)] = std::exp(log_max * i / (samples - 1));
  }
  radii.front() = 1.0;
  radii.back() = r_max;

  // Grid: each [r_i, r_{i+1}] split geometrically so steps stay below the ratio.
  std::vector<double>& grid = profile.t_grid;
  std::vector<std::size_t> row_index;
  grid.push_back(1.0);
  row_index.push_back(0);
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    const double ratio = radii[i + 1] / radii[i];
    const int pieces =
        std::max(1, static_cast<int>(std::ceil(std::log(ratio) / std::log(opts.max_grid_ratio))));
    for (int k = 1; k < pieces; ++k) grid.push_back(radii[i] * std::pow(ratio, double(k) / pieces));
    grid.push_back(radii[i + 1]);
    row_index.push_back(grid.size() - 1);
  }

  const numerics::FieldFunction g = curve.density_field();
  const std::vector<double> pieces = numerics::parallel_map<double>(grid.size(), [&](std::size_t k) {
    const double inner = k == 0 ? 0.0 : grid[k - 1];
    return numerics::integrate_annulus(g, inner, grid[k], cfg);
  });
  std::vector<double>& area = profile.area_energy;
  area.resize(grid.size());
  double running = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    running += std::max(0.0, pieces[k]);
    area[k] = running;
  }

  // int A(t)/t dt on each grid interval, then cumulative in order.
  const MonotoneCubic interp(grid, area);
  numerics::QuadratureConfig outer = cfg;
  outer.singularity_substitution = numerics::Singularity::none;
  const std::vector<double> slices =
      numerics::parallel_map<double>(grid.size() - 1, [&](std::size_t k) {
        const numerics::ScalarFunction integrand = [&](double t) { return interp(t) / t; };
        return numerics::integrate_1d(integrand, grid[k], grid[k + 1], outer);
      });
  std::vector<double> T(grid.size(), 0.0);
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) T[k + 1] = T[k] + std::max(0.0, slices[k]);

  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    const double t = T[row_index[i]];
    profile.rows.push_back({r, t, 2.0 * t / (std::numbers::pi * r * r)});
  }
  return profile;
}

LimitEstimate mean_energy_limit_estimate(const CharacteristicProfile& profile) {
  const std::size_t n = profile.rows.size();
  if (n < 4) throw InvalidArgument("limit estimate needs at least 4 profile rows");
  const std::size_t top = std::max<std::size_t>(2, (n + 3) / 4);
  double lo = profile.rows[n - 1].ratio;
  double hi = lo;
  for (std::size_t i = n - top; i < n; ++i) {
    lo = std::min(lo, profile.rows[i].ratio);
    hi = std::max(hi, profile.rows[i].ratio);
  }
  return {profile.rows[n - 1].ratio, hi - lo};
}

}  // namespace meandim::nevanlinna
