#include "meandim/numerics/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "meandim/elliptic/lattice.hpp"

namespace meandim::numerics {
namespace {

// Kronrod 15-point nodes (positive half, descending) and weights; the
// Gauss 7-point rule uses every other node.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Maps a parameter interval onto (part of) the integration range.
struct Piece {
  enum class Map { identity, square, tail } map;
  double origin;  // a for identity/square, a for tail (x = a + 1/v^2)
  double lo;
  double hi;

  double x(double u) const noexcept {
    switch (map) {
      case Map::identity: return u;
      case Map::square: return origin + u * u;
      case Map::tail: return origin + 1.0 / (u * u);
    }
    return u;
  }
  double jacobian(double u) const noexcept {
    switch (map) {
      case Map::identity: return 1.0;
      case Map::square: return 2.0 * u;
      case Map::tail: return 2.0 / (u * u * u);
    }
    return 1.0;
  }
};

struct Panel {
  std::size_t piece;
  double lo;
  double hi;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& l, const Panel& r) const noexcept {
    if (l.error != r.error) return l.error < r.error;
    if (l.piece != r.piece) return l.piece > r.piece;
    return l.lo > r.lo;
  }
};

class PanelRule {
 public:
  explicit PanelRule(const BatchFunction& f) : f_(f) {}

  Panel evaluate(const std::vector<Piece>& pieces, std::size_t index, double lo, double hi) {
    const Piece& piece = pieces[index];
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < 7; ++i) {
      u_[i] = centre - half * kXgk[i];
      u_[14 - i] = centre + half * kXgk[i];
    }
    u_[7] = centre;
    for (std::size_t i = 0; i < 15; ++i) x_[i] = piece.x(u_[i]);
    f_(x_, fx_);
    for (std::size_t i = 0; i < 15; ++i) {
      const double v = fx_[i] * piece.jacobian(u_[i]);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << std::setprecision(17) << "integrand is not finite at x = " << x_[i]
            << " (singular point, or refinement past double resolution)";
        throw QuadratureError(msg.str(), 0.0, std::numeric_limits<double>::infinity());
      }
      fx_[i] = v;
    }
    double kronrod = kWgk[7] * fx_[7];
    double gauss = kWg[3] * fx_[7];
    for (std::size_t i = 0; i < 7; ++i) {
      const double pair = fx_[i] + fx_[14 - i];
      kronrod += kWgk[i] * pair;
      if (i % 2 == 1) gauss += kWg[i / 2] * pair;
    }
    return {index, lo, hi, kronrod * half, std::fabs((kronrod - gauss) * half)};
  }

 private:
  const BatchFunction& f_;
  std::array<double, 15> u_{};
  std::array<double, 15> x_{};
  std::array<double, 15> fx_{};
};

std::vector<Piece> build_pieces(double a, double b, Singularity sing) {
  std::vector<Piece> pieces;
  const bool algebraic = sing == Singularity::algebraic_endpoint;
  const double head_end = std::isinf(b) ? a + 1.0 : b;
  if (algebraic) {
    pieces.push_back({Piece::Map::square, a, 0.0, std::sqrt(head_end - a)});
  } else {
    pieces.push_back({Piece::Map::identity, a, a, head_end});
  }
  if (std::isinf(b)) pieces.push_back({Piece::Map::tail, a, 0.0, 1.0});
  return pieces;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw InvalidArgument("quadrature tolerances must be positive");
  }
  if (max_subdivisions < 1) throw InvalidArgument("max_subdivisions must be >= 1");
}

double QuadratureConfig::target(double value) const noexcept {
  return std::max(abs_tol, rel_tol * std::fabs(value));
}

QuadResult integrate_1d_detailed(const BatchFunction& f, double a, double b,
                                 const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a) || std::isnan(b)) throw InvalidArgument("integration bounds invalid");
  if (b < a) {
    if (std::isinf(b)) throw InvalidArgument("lower limit must be finite and below +inf");
    QuadResult r = integrate_1d_detailed(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }
  if (a == b) return {};

  const std::vector<Piece> pieces = build_pieces(a, b, cfg.singularity_substitution);
  PanelRule rule(f);
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Panel p = rule.evaluate(pieces, i, pieces[i].lo, pieces[i].hi);
    total += p.value;
    error += p.error;
    queue.push(p);
  }

  int panels = static_cast<int>(queue.size());
  while (error > cfg.target(total)) {
    if (panels >= cfg.max_subdivisions) {
      throw QuadratureError("adaptive quadrature did not converge within max_subdivisions",
                            total, error);
    }
    const Panel worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (worst.hi - worst.lo <= 64.0 * std::numeric_limits<double>::epsilon() *
                                   std::max({1.0, std::fabs(worst.lo), std::fabs(worst.hi)})) {
      throw QuadratureError("tolerance unreachable in double precision (panel at resolution limit)",
                            total, error);
    }
    queue.pop();
    Panel left = rule.evaluate(pieces, worst.piece, worst.lo, mid);
    Panel right = rule.evaluate(pieces, worst.piece, mid, worst.hi);
    total += (left.value + right.value) - worst.value;
    error += (left.error + right.error) - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  // Re-sum in a canonical order; the running totals above depend on the
  // refinement history only through rounding.
  std::vector<Panel> all;
  all.reserve(queue.size());
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) {
    return l.piece != r.piece ? l.piece < r.piece : l.lo < r.lo;
  });
  QuadResult result;
  for (const Panel& p : all) {
    result.value += p.value;
    result.error += p.error;
  }
  result.panels = panels;
  return result;
}

double integrate_1d(const BatchFunction& f, double a, double b, const QuadratureConfig& cfg) {
  return integrate_1d_detailed(f, a, b, cfg).value;
}

double integrate_1d(const ScalarFunction& f, double a, double b, const QuadratureConfig& cfg) {
  return integrate_1d_detailed(batch(f), a, b, cfg).value;
}

double periodic_mean(const BatchFunction& f, const QuadratureConfig& cfg) {
  cfg.validate();
  constexpr std::size_t kMinNodes = 32;
  constexpr std::size_t kMaxNodes = std::size_t{1} << 22;
  std::vector<double> theta(kMinNodes);
  std::vector<double> values(kMinNodes);

  auto mean_at = [&](std::size_t n, double offset) {
    theta.resize(n);
    values.resize(n);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) theta[j] = (static_cast<double>(j) + offset) * step;
    f(theta, values);
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(n);
  };

  std::size_t n = kMinNodes;
  double estimate = mean_at(n, 0.0);
  while (true) {
    const double refined = 0.5 * (estimate + mean_at(n, 0.5));
    n *= 2;
    const double change = std::fabs(refined - estimate);
    estimate = refined;
    if (!std::isfinite(estimate)) throw QuadratureError("periodic integrand not finite", estimate, change);
    if (change <= cfg.target(estimate)) return estimate;
    if (n >= kMaxNodes) {
      throw QuadratureError("periodic trapezoid rule did not converge", estimate, change);
    }
  }
}

double integrate_annulus(const FieldFunction& g, double inner, double outer,
                         const QuadratureConfig& cfg) {
  if (!(inner >= 0.0) || !(outer > inner) || !std::isfinite(outer)) {
    throw InvalidArgument("annulus needs 0 <= inner < outer < inf");
  }
  cfg.validate();
  QuadratureConfig ring_cfg = cfg;
  ring_cfg.abs_tol = 0.1 * cfg.abs_tol / (std::numbers::pi * (outer * outer - inner * inner));
  ring_cfg.rel_tol = 0.1 * cfg.rel_tol;
  QuadratureConfig radial_cfg = cfg;
  radial_cfg.singularity_substitution = Singularity::none;

  std::vector<Complex> ring;
  const BatchFunction radial = [&](std::span<const double> r, std::span<double> out) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double rad = r[i];
      const BatchFunction angular = [&](std::span<const double> theta, std::span<double> vals) {
        ring.resize(theta.size());
        for (std::size_t j = 0; j < theta.size(); ++j) ring[j] = std::polar(rad, theta[j]);
        g(ring, vals);
      };
      out[i] = 2.0 * std::numbers::pi * rad * periodic_mean(angular, ring_cfg);
    }
  };
  return integrate_1d(radial, inner, outer, radial_cfg);
}

double integrate_disk(const FieldFunction& g, double radius, const QuadratureConfig& cfg) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("disk radius must be > 0");
  return integrate_annulus(g, 0.0, radius, cfg);
}

double integrate_disk(const ScalarField& g, double radius, const QuadratureConfig& cfg) {
  return integrate_disk(batch(g), radius, cfg);
}

double integrate_parallelogram(const FieldFunction& g, const Lattice& lattice,
                               const QuadratureConfig& cfg) {
  cfg.validate();
  const double area = lattice.area();
  const Complex a = lattice.a();
  const Complex b = lattice.b();
  QuadratureConfig inner_cfg = cfg;
  inner_cfg.singularity_substitution = Singularity::none;
  inner_cfg.abs_tol = 0.1 * cfg.abs_tol / area;
  inner_cfg.rel_tol = 0.1 * cfg.rel_tol;
  QuadratureConfig outer_cfg = cfg;
  outer_cfg.singularity_substitution = Singularity::none;
  outer_cfg.abs_tol = cfg.abs_tol / area;

  std::vector<Complex> points;
  const BatchFunction outer = [&](std::span<const double> s, std::span<double> out) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Complex base = s[i] * a;
      const BatchFunction inner = [&](std::span<const double> t, std::span<double> vals) {
        points.resize(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) points[j] = base + t[j] * b;
        g(points, vals);
      };
      out[i] = integrate_1d(inner, 0.0, 1.0, inner_cfg);
    }
  };
  return area * integrate_1d(outer, 0.0, 1.0, outer_cfg);
}

double integrate_parallelogram(const ScalarField& g, const Lattice& lattice,
                               const QuadratureConfig& cfg) {
  return integrate_parallelogram(batch(g), lattice, cfg);
}

FieldFunction batch(ScalarField g) {
  return [g = std::move(g)](std::span<const Complex> z, std::span<double> out) {
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = g(z[i]);
  };
}

BatchFunction batch(ScalarFunction f) {
  return [f = std::move(f)](std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = f(x[i]);
  };
}

}  // namespace meandim::numerics
