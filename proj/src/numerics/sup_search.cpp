#include "meandim/numerics/sup_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace meandim::numerics {
namespace {

struct Sample {
  double value;
  Complex z;
};

double sanitize(double v) {
  return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
}

class Sampler {
 public:
  Sampler(const FieldFunction& g, const Rect& rect) : g_(g), rect_(rect) {}

  Complex clamp(Complex z) const {
    return {std::clamp(z.real(), rect_.x_min, rect_.x_max),
            std::clamp(z.imag(), rect_.y_min, rect_.y_max)};
  }

  void eval(std::span<const Complex> z, std::span<double> out) {
    g_(z, out);
    for (double& v : out) v = sanitize(v);
    evaluations_ += static_cast<long>(z.size());
  }

  double eval(Complex z) {
    double out = 0.0;
    eval(std::span<const Complex>(&z, 1), std::span<double>(&out, 1));
    return out;
  }

  long evaluations() const { return evaluations_; }

 private:
  const FieldFunction& g_;
  Rect rect_;
  long evaluations_ = 0;
};

// Pattern search: move to the best of the 8 neighbours at the current step
// while that improves, then shrink the step.
Sample refine(Sampler& sampler, Sample start, double step_x, double step_y,
              const SupSearchConfig& cfg, double& final_step) {
  constexpr int kMaxMovesPerLevel = 64;
  static constexpr std::array<std::pair<int, int>, 8> kOffsets = {
      {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}}};
  std::array<Complex, 8> points{};
  std::array<double, 8> values{};
  Sample best = start;
  for (int level = 0; level < cfg.refinement_levels; ++level) {
    for (int move = 0; move < kMaxMovesPerLevel; ++move) {
      for (std::size_t k = 0; k < kOffsets.size(); ++k) {
        points[k] = sampler.clamp(best.z + Complex(kOffsets[k].first * step_x,
                                                   kOffsets[k].second * step_y));
      }
      sampler.eval(points, values);
      std::size_t arg = kOffsets.size();
      double top = best.value;
      for (std::size_t k = 0; k < kOffsets.size(); ++k) {
        if (values[k] > top) {
          top = values[k];
          arg = k;
        }
      }
      if (arg == kOffsets.size()) break;
      best = {top, points[arg]};
    }
    step_x *= cfg.shrink_factor;
    step_y *= cfg.shrink_factor;
  }
  final_step = std::max(step_x, step_y);
  return best;
}

}  // namespace

void SupSearchConfig::validate() const {
  if (initial_grid < 8) throw InvalidArgument("sup search initial_grid must be >= 8");
  if (refinement_levels < 1) throw InvalidArgument("sup search refinement_levels must be >= 1");
  if (!(shrink_factor > 0.0 && shrink_factor < 1.0)) {
    throw InvalidArgument("sup search shrink_factor must lie in (0, 1)");
  }
  if (restarts < 1) throw InvalidArgument("sup search restarts must be >= 1");
}

SupResult sup_search(const FieldFunction& g, const Rect& domain, const SupSearchConfig& cfg) {
  cfg.validate();
  if (!(domain.width() > 0.0) || !(domain.height() > 0.0) || !std::isfinite(domain.width()) ||
      !std::isfinite(domain.height())) {
    throw InvalidArgument("sup search domain is degenerate");
  }

  Sampler sampler(g, domain);
  const int n = cfg.initial_grid;
  const double hx = domain.width() / (n - 1);
  const double hy = domain.height() / (n - 1);

  std::vector<double> grid(static_cast<std::size_t>(n) * n);
  std::vector<Complex> row(n);
  for (int j = 0; j < n; ++j) {
    const double y = j == n - 1 ? domain.y_max : domain.y_min + j * hy;
    for (int i = 0; i < n; ++i) row[i] = {i == n - 1 ? domain.x_max : domain.x_min + i * hx, y};
    sampler.eval(row, std::span<double>(grid).subspan(static_cast<std::size_t>(j) * n, n));
  }
  auto point_of = [&](int i, int j) {
    return Complex(i == n - 1 ? domain.x_max : domain.x_min + i * hx,
                   j == n - 1 ? domain.y_max : domain.y_min + j * hy);
  };

  // Best grid sample within each of k x k strata of the index grid.
  const int k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(cfg.restarts))));
  std::vector<std::pair<Sample, int>> strata;
  for (int bj = 0; bj < k; ++bj) {
    for (int bi = 0; bi < k; ++bi) {
      const int i0 = bi * n / k, i1 = (bi + 1) * n / k;
      const int j0 = bj * n / k, j1 = (bj + 1) * n / k;
      int best_i = -1, best_j = -1;
      double best = -std::numeric_limits<double>::infinity();
      for (int j = j0; j < j1; ++j) {
        for (int i = i0; i < i1; ++i) {
          const double v = grid[static_cast<std::size_t>(j) * n + i];
          if (best_i < 0 || v > best) {
            best = v;
            best_i = i;
            best_j = j;
          }
        }
      }
      if (best_i >= 0) strata.push_back({{best, point_of(best_i, best_j)}, best_j * n + best_i});
    }
  }
  std::stable_sort(strata.begin(), strata.end(), [](const auto& l, const auto& r) {
    return l.first.value != r.first.value ? l.first.value > r.first.value : l.second < r.second;
  });
  if (strata.size() > static_cast<std::size_t>(cfg.restarts)) strata.resize(cfg.restarts);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);

  SupResult result;
  result.value = -std::numeric_limits<double>::infinity();
  for (const auto& [start, index] : strata) {
    (void)index;
    Sample from = start;
    const Complex moved = sampler.clamp(start.z + Complex(jitter(rng) * hx, jitter(rng) * hy));
    const double moved_value = sampler.eval(moved);
    if (moved_value > from.value) from = {moved_value, moved};

    double step = 0.0;
    const Sample found = refine(sampler, from, hx, hy, cfg, step);
    if (found.value > result.value) {
      result.value = found.value;
      result.argmax = found.z;
      result.spacing = step;
    }
  }
  result.evaluations = sampler.evaluations();
  return result;
}

SupResult sup_search(const ScalarField& g, const Rect& domain, const SupSearchConfig& cfg) {
  return sup_search(batch(g), domain, cfg);
}

}  // namespace meandim::numerics
