#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <stdexcept>

#include "meandim/elliptic/lattice.hpp"
#include "meandim/numerics/parallel.hpp"
#include "meandim/numerics/quadrature.hpp"
#include "meandim/numerics/sup_search.hpp"

namespace {

using namespace meandim;
using namespace meandim::numerics;
constexpr double kPi = std::numbers::pi;

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) {
    if (const char* old = std::getenv("MEANDIM_LAB_THREADS")) saved_ = old;
    if (value) {
      setenv("MEANDIM_LAB_THREADS", value, 1);
    } else {
      unsetenv("MEANDIM_LAB_THREADS");
    }
  }
  ~EnvGuard() {
    if (saved_.empty()) {
      unsetenv("MEANDIM_LAB_THREADS");
    } else {
      setenv("MEANDIM_LAB_THREADS", saved_.c_str(), 1);
    }
  }

 private:
  std::string saved_;
};

TEST(Quadrature, CubicEllipticIntegralMatchesBeta) {
  QuadratureConfig cfg;
  cfg.singularity_substitution = Singularity::algebraic_endpoint;
  const double value = integrate_1d(
      [](double x) { return 1.0 / std::sqrt(x * x * x - 1.0); }, 1.0,
      std::numeric_limits<double>::infinity(), cfg);
  // B(1/6, 1/2) / 3
  const double oracle = std::tgamma(1.0 / 6.0) * std::sqrt(kPi) / std::tgamma(2.0 / 3.0) / 3.0;
  EXPECT_NEAR(value, oracle, 1e-11);
  EXPECT_NEAR(value, 2.42865064788758158955, 1e-11);
}

TEST(Quadrature, PolynomialExact) {
  const QuadratureConfig cfg;
  const QuadResult r = integrate_1d_detailed(
      batch(ScalarFunction([](double x) { return 5 * x * x * x * x - 3 * x + 1; })), -1.0, 2.0,
      cfg);
  EXPECT_NEAR(r.value, 33.0 - 4.5 + 3.0, 1e-12);
  EXPECT_EQ(r.panels, 1);
}

TEST(Quadrature, InfiniteTail) {
  const QuadratureConfig cfg;
  EXPECT_NEAR(integrate_1d([](double x) { return std::exp(-x); }, 0.0,
                           std::numeric_limits<double>::infinity(), cfg),
              1.0, 1e-11);
  EXPECT_NEAR(integrate_1d([](double x) { return 1.0 / (1.0 + x * x); }, 0.0,
                           std::numeric_limits<double>::infinity(), cfg),
              kPi / 2, 1e-11);
}

TEST(Quadrature, Reproducible) {
  const QuadratureConfig cfg;
  auto f = [](double x) { return std::sin(30 * x) * std::exp(-x); };
  const double a = integrate_1d(f, 0.0, 5.0, cfg);
  const double b = integrate_1d(f, 0.0, 5.0, cfg);
  EXPECT_EQ(a, b);
}

TEST(Quadrature, RunsOutOfSubdivisions) {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 3;
  try {
    integrate_1d([](double x) { return std::sin(1.0 / x); }, 1e-3, 1.0, cfg);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_TRUE(std::isfinite(e.partial_value()));
    EXPECT_GT(e.error_estimate(), 0.0);
  }
}

TEST(Quadrature, RejectsBadConfig) {
  QuadratureConfig cfg;
  cfg.abs_tol = 0.0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.max_subdivisions = 0;
  EXPECT_THROW(integrate_1d([](double x) { return x; }, 0.0, 1.0, cfg), InvalidArgument);
  EXPECT_THROW(integrate_1d([](double x) { return x; }, 0.0, std::nan(""), QuadratureConfig{}),
               InvalidArgument);
}

TEST(Quadrature, PeriodicMean) {
  const QuadratureConfig cfg;
  // Mean of exp(cos t) is I0(1).
  const double mean = periodic_mean(
      batch(ScalarFunction([](double t) { return std::exp(std::cos(t)); })), cfg);
  EXPECT_NEAR(mean, 1.266065877752008, 1e-13);
  EXPECT_NEAR(periodic_mean(batch(ScalarFunction([](double t) { return 3.0 + std::sin(5 * t); })),
                            cfg),
              3.0, 1e-14);
}

TEST(Quadrature, DiskAndAnnulus) {
  const QuadratureConfig cfg;
  const ScalarField one = [](Complex) { return 1.0; };
  EXPECT_NEAR(integrate_disk(one, 2.0, cfg), 4 * kPi, 1e-10);
  const ScalarField r2 = [](Complex z) { return std::norm(z); };
  EXPECT_NEAR(integrate_disk(r2, 1.5, cfg), kPi * std::pow(1.5, 4) / 2, 1e-10);
  EXPECT_NEAR(integrate_annulus(batch(r2), 1.0, 2.0, cfg), kPi * (16.0 - 1.0) / 2, 1e-10);
  const ScalarField gauss = [](Complex z) { return std::exp(-std::norm(z)); };
  EXPECT_NEAR(integrate_disk(gauss, 3.0, cfg), kPi * (1 - std::exp(-9.0)), 1e-10);
  EXPECT_THROW(integrate_annulus(batch(one), 2.0, 1.0, cfg), InvalidArgument);
  EXPECT_THROW(integrate_disk(one, 0.0, cfg), InvalidArgument);
}

TEST(Quadrature, AnnuliAddUp) {
  const QuadratureConfig cfg;
  const FieldFunction g = batch(ScalarField([](Complex z) { return 1.0 + z.real() * z.real(); }));
  const double whole = integrate_disk(g, 2.0, cfg);
  const double parts = integrate_annulus(g, 0.0, 0.7, cfg) + integrate_annulus(g, 0.7, 2.0, cfg);
  EXPECT_NEAR(whole, parts, 1e-10);
}

TEST(Quadrature, Parallelogram) {
  const QuadratureConfig cfg;
  const Lattice lattice(Complex(2.0, 0.0), Complex(0.5, 1.5));
  EXPECT_NEAR(integrate_parallelogram(ScalarField([](Complex) { return 1.0; }), lattice, cfg), 3.0,
              1e-12);
  // Linear integrand: area times value at the centroid.
  const Complex centre = 0.5 * (lattice.a() + lattice.b());
  EXPECT_NEAR(integrate_parallelogram(ScalarField([](Complex z) { return z.imag(); }), lattice, cfg),
              3.0 * centre.imag(), 1e-12);
}

TEST(Quadrature, SimpleExamples) {
  const QuadratureConfig cfg;
  EXPECT_NEAR(integrate_1d([](double x) { return x; }, 0.0, 1.0, cfg), 0.5, 1e-15);
  EXPECT_NEAR(integrate_1d([](double) { return 1.0 / (2 * kPi); }, 0.0, 2 * kPi, cfg), 1.0, 1e-15);
  EXPECT_NEAR(integrate_disk(ScalarField([](Complex) { return 1.0; }), 1.0, cfg), kPi, 1e-13);
  EXPECT_EQ(integrate_disk(ScalarField([](Complex) { return 0.0; }), 5.0, cfg), 0.0);
  const Lattice unit(Complex(1.0, 0.0), Complex(0.0, 1.0));
  EXPECT_NEAR(integrate_parallelogram(ScalarField([](Complex) { return 1.0; }), unit, cfg), 1.0,
              1e-14);
}

TEST(Quadrature, LinearOnRandomPolynomials) {
  const QuadratureConfig cfg;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> p(6), q(6);
    for (double& c : p) c = coef(rng);
    for (double& c : q) c = coef(rng);
    const double alpha = coef(rng);
    const double beta = coef(rng);
    auto poly = [](const std::vector<double>& c) {
      return [c](double x) {
        double v = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
        return v;
      };
    };
    const auto f = poly(p);
    const auto g = poly(q);
    const double a = -0.5, b = 1.7;
    const double ip = integrate_1d(f, a, b, cfg);
    const double iq = integrate_1d(g, a, b, cfg);
    const double combined =
        integrate_1d([&](double x) { return alpha * f(x) + beta * g(x); }, a, b, cfg);
    const double tol = (std::fabs(alpha) + std::fabs(beta) + 1.0) *
                       std::max(cfg.abs_tol, cfg.rel_tol * (std::fabs(ip) + std::fabs(iq) + 1.0));
    EXPECT_LE(std::fabs(combined - alpha * ip - beta * iq), tol);
  }
}

TEST(Quadrature, DiskMonotoneInRadius) {
  const QuadratureConfig cfg;
  const ScalarField g = [](Complex z) { return std::pow(std::sin(z.real() * z.imag()), 2); };
  double previous = 0.0;
  for (double r = 0.5; r <= 4.0; r += 0.5) {
    const double v = integrate_disk(g, r, cfg);
    EXPECT_GE(v, previous);
    previous = v;
  }
}

TEST(SupSearch, CubicQuotient) {
  const double c = 1.0 / std::sqrt(8.0);
  const ScalarField g = [c](Complex z) {
    return std::abs(z * z * z - c) / std::pow(1.0 + std::norm(z), 2);
  };
  const SupResult r = sup_search(g, Rect::centered_square(4.0), {});
  EXPECT_NEAR(r.value, c, 1e-8);
  EXPECT_LE(r.value, c + 1e-15);
}

TEST(SupSearch, TrivialCases) {
  EXPECT_EQ(sup_search(ScalarField([](Complex) { return 0.7; }), Rect::centered_square(1.0), {})
                .value,
            0.7);
  const SupResult r =
      sup_search(ScalarField([](Complex z) { return -std::norm(z); }), Rect::centered_square(1.0), {});
  EXPECT_NEAR(r.value, 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.argmax), 0.0, 1e-7);
}

TEST(SupSearch, NotAboveFinerReferenceGrid) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    double a[6];
    for (double& c : a) c = coef(rng);
    const ScalarField g = [&](Complex z) {
      const double x = z.real(), y = z.imag();
      return a[0] + a[1] * x + a[2] * y + a[3] * x * x + a[4] * x * y + a[5] * y * y * y;
    };
    const Rect box{-1.0, 1.0, -0.5, 1.5};
    SupSearchConfig cfg;
    cfg.initial_grid = 16;
    const SupResult r = sup_search(g, box, cfg);
    // 10x finer reference grid. The search samples g, so it can exceed the
    // grid maximum only by the grid's own discretisation gap.
    double reference = -1e300;
    const int n = 10 * cfg.initial_grid * 10;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const Complex z(box.x_min + box.width() * i / n, box.y_min + box.height() * j / n);
        reference = std::max(reference, g(z));
      }
    }
    EXPECT_LE(r.value, reference + 1e-5) << trial;
    EXPECT_GE(r.value, reference - 1e-9) << trial;
  }
}

TEST(SupSearch, FindsInteriorPeak) {
  const Complex peak(0.3, -0.2);
  const ScalarField g = [&](Complex z) { return 2.0 - std::norm(z - peak); };
  const SupResult r = sup_search(g, Rect::centered_square(1.0), {});
  EXPECT_LE(r.value, 2.0);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  EXPECT_NEAR(std::abs(r.argmax - peak), 0.0, 1e-6);
  EXPECT_GT(r.evaluations, 0);
}

TEST(SupSearch, CornerMaximum) {
  const ScalarField g = [](Complex z) { return z.real() + z.imag(); };
  const SupResult r = sup_search(g, Rect{0.0, 1.0, 0.0, 2.0}, {});
  EXPECT_DOUBLE_EQ(r.value, 3.0);
}

TEST(SupSearch, NeverAboveTrueSupAndDeterministic) {
  const ScalarField g = [](Complex z) {
    return std::sin(7 * z.real()) * std::cos(5 * z.imag()) + 0.1 * z.real();
  };
  SupSearchConfig cfg;
  cfg.seed = 42;
  const SupResult a = sup_search(g, Rect::centered_square(2.0), cfg);
  SupResult b;
  {
    EnvGuard env("1");
    b = sup_search(g, Rect::centered_square(2.0), cfg);
  }
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.argmax, b.argmax);
  EXPECT_LE(a.value, 1.0 + 0.1 * 2.0);
  EXPECT_GT(a.value, 1.0);
}

TEST(SupSearch, RejectsBadConfig) {
  SupSearchConfig cfg;
  cfg.shrink_factor = 1.0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  const ScalarField g = [](Complex) { return 0.0; };
  EXPECT_THROW(sup_search(g, Rect{0.0, 0.0, 0.0, 1.0}, {}), InvalidArgument);
}

TEST(Parallel, ThreadCapFromEnvironment) {
  {
    EnvGuard env("1");
    EXPECT_EQ(worker_count(), 1u);
  }
  {
    EnvGuard env("2");
    EXPECT_LE(worker_count(), 2u);
    EXPECT_GE(worker_count(), 1u);
  }
  {
    EnvGuard env("not-a-number");
    EXPECT_GE(worker_count(), 1u);
  }
}

TEST(Parallel, MapKeepsIndexOrder) {
  const std::vector<long> out = parallel_map<long>(1000, [](std::size_t i) {
    return static_cast<long>(i * i);
  });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<long>(i * i));
  EXPECT_TRUE(parallel_map<int>(0, [](std::size_t) { return 1; }).empty());
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(64,
                            [](std::size_t i) {
                              if (i == 17) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

}  // namespace
