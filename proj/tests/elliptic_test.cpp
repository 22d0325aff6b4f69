#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "meandim/elliptic/brody_curve.hpp"
#include "meandim/elliptic/lattice.hpp"
#include "meandim/elliptic/weierstrass.hpp"
#include "meandim/simd/dispatch.hpp"

namespace {

using namespace meandim;
constexpr double kPi = std::numbers::pi;

const ExtremalBrodyCurve& curve() {
  static const ExtremalBrodyCurve c = ExtremalBrodyCurve::build({});
  return c;
}

// Symmetric truncated lattice sum for p; the tail is O(1/M^2) here.
Complex wp_lattice_sum(const Lattice& lat, Complex z, int m) {
  Complex sum = 1.0 / (z * z);
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      const Complex w = static_cast<double>(i) * lat.a() + static_cast<double>(j) * lat.b();
      sum += 1.0 / ((z - w) * (z - w)) - 1.0 / (w * w);
    }
  }
  return sum;
}

std::vector<Complex> random_reduced_points(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Lattice& lat = curve().lattice();
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < count) {
    const Complex z = unit(rng) * lat.a() + unit(rng) * lat.b();
    if (std::abs(curve().pole_offset(z)) > 0.05) out.push_back(z);
  }
  return out;
}

TEST(Lattice, SpecExamples) {
  EXPECT_DOUBLE_EQ(lattice_area(Lattice(Complex(1.0, 0.0), Complex(0.0, 1.0))), 1.0);
  const Lattice unit(Complex(1.0, 0.0), Complex(0.0, 1.0));
  EXPECT_NEAR(std::abs(reduce_to_fundamental(unit, Complex(2.5, 3.5)) - Complex(0.5, 0.5)), 0.0,
              1e-15);
  EXPECT_EQ(reduce_to_fundamental(unit, Complex(0.25, 0.75)), Complex(0.25, 0.75));
  const Lattice& lat = curve().lattice();
  const Complex z(0.4, 0.3);
  EXPECT_NEAR(std::abs(reduce_to_fundamental(lat, z + lat.a()) - reduce_to_fundamental(lat, z)),
              0.0, 1e-14);
  EXPECT_NEAR(lattice_area(lat.scaled(1.7)), 1.7 * 1.7 * lattice_area(lat), 1e-12);
}

TEST(Weierstrass, LeadingLaurentTerm) {
  const WeierstrassP& wp = curve().wp();
  for (int k = 0; k < 8; ++k) {
    const Complex z = std::polar(1e-4, 0.8 * k);
    EXPECT_LE(std::abs(wp.eval(z).p * z * z - 1.0), 1e-6);
  }
}

TEST(Weierstrass, OdeResidualAtRandomPoints) {
  const WeierstrassP& wp = curve().wp();
  for (const Complex z : random_reduced_points(100, 3)) {
    const WeierstrassValue v = wp.eval(z);
    const Complex lhs = v.dp * v.dp;
    const Complex rhs = 4.0 * v.p * v.p * v.p - wp.g2() * v.p - wp.g3();
    EXPECT_LE(std::abs(lhs - rhs), 1e-8 * (1.0 + std::pow(std::abs(v.p), 3))) << z;
  }
}

TEST(ExtremalCurve, DoublyPeriodicAndOde) {
  const ExtremalBrodyCurve& c = curve();
  const double k = c.K();
  for (const Complex z : random_reduced_points(100, 9)) {
    const CurveValue f = c.eval(z);
    if (f.pole_chart) continue;
    EXPECT_LE(std::abs(c.eval(z + 2.0 * c.omega1()).value - f.value), 1e-9) << z;
    EXPECT_LE(std::abs(c.eval(z + 2.0 * c.omega2()).value - f.value), 1e-9) << z;
    const Complex rhs = k * (f.value * f.value * f.value - 1.0 / std::sqrt(8.0));
    EXPECT_LE(std::abs(f.derivative * f.derivative - rhs),
              1e-6 * (1.0 + std::pow(std::abs(f.value), 3)));
    EXPECT_NEAR(c.spherical_derivative(z), c.spherical_derivative_ode_form(z), 1e-8);
  }
  EXPECT_NEAR(c.wp().g3().real(), std::pow(kPi, 3) / 2, 1e-12);
}

TEST(ExtremalCurve, BrodyBoundOnDenseGrid) {
  const ExtremalBrodyCurve& c = curve();
  const Lattice& lat = c.lattice();
  double worst = 0.0;
  for (int i = 0; i < 400; ++i) {
    for (int j = 0; j < 400; ++j) {
      worst = std::max(worst, c.spherical_derivative((i / 400.0) * lat.a() + (j / 400.0) * lat.b()));
    }
  }
  EXPECT_LE(worst, 1.0 + 1e-6);
  EXPECT_NEAR(worst, 1.0, 1e-4);
}

TEST(Lattice, AreaReduceNearest) {
  const Lattice lat(Complex(2.0, 0.0), Complex(1.0, 3.0));
  EXPECT_DOUBLE_EQ(lat.area(), 6.0);
  const Complex z(7.3, -4.1);
  const Complex r = lat.reduce(z);
  const auto [s, t] = lat.coordinates(r);
  EXPECT_GE(s, 0.0);
  EXPECT_LT(s, 1.0);
  EXPECT_GE(t, 0.0);
  EXPECT_LT(t, 1.0);
  const auto [ds, dt] = lat.coordinates(z - r);
  EXPECT_NEAR(ds, std::round(ds), 1e-12);
  EXPECT_NEAR(dt, std::round(dt), 1e-12);
  EXPECT_DOUBLE_EQ(lat.shortest_vector(), 2.0);
  EXPECT_NEAR(std::abs(lat.nearest_point(Complex(2.9, 2.9)) - Complex(3.0, 3.0)), 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(lat.scaled(0.5).area(), 1.5);
}

TEST(Lattice, RejectsDegenerate) {
  EXPECT_THROW(Lattice(Complex(1.0, 0.0), Complex(2.0, 0.0)), InvalidArgument);
  EXPECT_THROW(Lattice(Complex(0.0, 1.0), Complex(1.0, 0.0)), InvalidArgument);
}

TEST(Lattice, NearestPointOnSkewedBasis) {
  // Badly skewed generators of the square lattice.
  const Lattice lat(Complex(1.0, 0.0), Complex(7.0, 1.0));
  EXPECT_NEAR(lat.shortest_vector(), 1.0, 1e-12);
  const Complex z(0.4, 5.3);
  EXPECT_NEAR(std::abs(lat.nearest_point(z) - Complex(0.0, 5.0)), 0.0, 1e-12);
}

TEST(Weierstrass, MatchesLatticeSum) {
  const WeierstrassP& wp = curve().wp();
  for (const Complex z : {Complex(0.31, 0.17), Complex(curve().omega1(), 0.0), Complex(1.1, 0.9)}) {
    const Complex series = wp.eval(z).p;
    const Complex direct = wp_lattice_sum(wp.lattice(), z, 300);
    EXPECT_NEAR(std::abs(series - direct), 0.0, 1e-4) << z;
  }
}

TEST(Weierstrass, HalfPeriodValue) {
  // e1 = (g3/4)^(1/3) = pi/2 for these invariants.
  EXPECT_NEAR(curve().wp().eval(curve().omega1()).p.real(), kPi / 2, 1e-10);
  EXPECT_NEAR(std::cbrt(curve().wp().g3().real() / 4.0), kPi / 2, 1e-14);
}

TEST(Weierstrass, OdeEvenPeriodic) {
  const WeierstrassP& wp = curve().wp();
  const Lattice& lat = wp.lattice();
  for (const Complex z : {Complex(0.2, 0.3), Complex(-0.7, 0.45), Complex(1.3, -0.2)}) {
    EXPECT_LT(wp.ode_residual(z), 1e-10);
    const Complex p = wp.eval(z).p;
    EXPECT_NEAR(std::abs(wp.eval(-z).p - p), 0.0, 1e-10 * std::abs(p));
    EXPECT_NEAR(std::abs(wp.eval(z + lat.a()).p - p), 0.0, 1e-10 * std::abs(p));
    EXPECT_NEAR(std::abs(wp.eval(z - 2.0 * lat.b()).p - p), 0.0, 1e-10 * std::abs(p));
    EXPECT_NEAR(std::abs(wp.eval(-z).dp + wp.eval(z).dp), 0.0, 1e-9 * std::abs(wp.eval(z).dp));
  }
}

TEST(Weierstrass, PoleGuard) {
  const WeierstrassP& wp = curve().wp();
  EXPECT_THROW(wp.eval(wp.lattice().a()), PoleError);
  const WeierstrassValue rec = wp.reciprocal_offset(0.0);
  EXPECT_EQ(std::abs(rec.p), 0.0);
}

TEST(ExtremalCurve, Constants) {
  const ExtremalBrodyCurve& c = curve();
  EXPECT_NEAR(c.K(), kPi * std::sqrt(8.0), 1e-15);
  EXPECT_NEAR(c.elliptic_integral(), 2.42865064788758158955, 1e-12);
  EXPECT_NEAR(c.omega1(), 0.968891427766688716, 1e-12);
  // omega1 = I / sqrt(2 pi)
  EXPECT_NEAR(c.omega1(), c.elliptic_integral() / std::sqrt(2 * kPi), 1e-14);
  EXPECT_NEAR(c.lattice().area(), 2 * std::sqrt(3.0) * c.omega1() * c.omega1(), 1e-13);
  EXPECT_NEAR(c.lattice().area(), 3.25192746551382645, 1e-11);
  EXPECT_NEAR(std::abs(c.lattice().a() - 2.0 * c.omega1()), 0.0, 1e-15);
  EXPECT_NEAR(std::arg(c.omega2()), kPi / 3, 1e-15);
  EXPECT_LT(c.validation().worst(), 1e-8);
}

TEST(ExtremalCurve, CriticalValues) {
  const ExtremalBrodyCurve& c = curve();
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(c.eval(0.0).value - r), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(c.eval(c.omega2()).value - r * std::polar(1.0, 2 * kPi / 3)), 0.0, 1e-10);
  const CurveValue pole = c.eval(c.omega1());
  EXPECT_TRUE(pole.pole_chart);
  EXPECT_LT(std::abs(pole.value), 1e-12);
  for (const Complex& v : c.critical_values()) EXPECT_NEAR(std::abs(v), r, 1e-15);
  // Critical points: df vanishes at 0 and omega2 (f^3 = 1/sqrt8 there).
  EXPECT_LT(c.spherical_derivative(0.0), 1e-6);
  EXPECT_LT(c.spherical_derivative(c.omega2()), 1e-6);
}

TEST(ExtremalCurve, SphericalDerivativeBoundedByOne) {
  const ExtremalBrodyCurve& c = curve();
  const Lattice& lat = c.lattice();
  double worst = 0.0;
  for (int i = 0; i <= 60; ++i) {
    for (int j = 0; j <= 60; ++j) {
      const Complex z = (i / 60.0) * lat.a() + (j / 60.0) * lat.b();
      const double d = c.spherical_derivative(z);
      EXPECT_TRUE(std::isfinite(d));
      worst = std::max(worst, d);
    }
  }
  EXPECT_LE(worst, 1.0 + 1e-9);
  EXPECT_GT(worst, 0.99);
}

TEST(ExtremalCurve, OdeFormAgrees) {
  const ExtremalBrodyCurve& c = curve();
  for (const Complex z : {Complex(0.11, 0.07), Complex(0.9, 0.05), Complex(c.omega1(), 1e-7),
                          Complex(1.4, 0.8), Complex(-0.3, 1.2)}) {
    EXPECT_NEAR(c.spherical_derivative(z), c.spherical_derivative_ode_form(z), 1e-9) << z;
  }
}

TEST(ExtremalCurve, BatchDensityMatchesPointwise) {
  const ExtremalBrodyCurve& c = curve();
  std::vector<Complex> z;
  for (int k = 0; k < 37; ++k) z.push_back(c.omega1() + std::polar(0.02 * k, 0.7 * k));
  for (simd::Level level : {simd::Level::scalar, simd::Level::avx2}) {
    simd::ScopedLevel scoped(level);
    std::vector<double> out(z.size());
    c.energy_density(z, out);
    for (std::size_t i = 0; i < z.size(); ++i) {
      const double d = c.spherical_derivative(z[i]);
      EXPECT_NEAR(out[i], d * d, 1e-12) << i;
      EXPECT_TRUE(std::isfinite(out[i]));
    }
  }
}

TEST(ExtremalCurve, FiniteAtPole) {
  const ExtremalBrodyCurve& c = curve();
  const double d = c.spherical_derivative(c.omega1());
  EXPECT_TRUE(std::isfinite(d));
  // The pole is double, so g = 1/f has a critical point there too.
  EXPECT_LT(d, 1e-9);
  EXPECT_GT(c.spherical_derivative(c.omega1() + Complex(0.01, 0.0)), 1e-3);
}

}  // namespace
