#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "meandim/helmholtz/barrier.hpp"
#include "meandim/helmholtz/w_lambda.hpp"

namespace {

using namespace meandim;
using namespace meandim::helmholtz;

// I0(x) = sum_k (x^2/4)^k / (k!)^2
double bessel_i0(double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= (x * x / 4.0) / (static_cast<double>(k) * k);
    sum += term;
  }
  return sum;
}

TEST(WLambda, ValueAtOrigin) {
  for (double lambda : {0.5, 1.0, 4.0}) EXPECT_NEAR(w_eval({lambda}, 0.0), 1.0, 1e-12);
}

TEST(WLambda, BesselOracle) {
  EXPECT_NEAR(w_eval({1.0}, Complex(1.0, 0.0)), 1.26606588, 1e-8);
  for (double r : {0.3, 1.0, 2.5, 6.0}) {
    for (double lambda : {1.0, 2.0}) {
      const double expected = bessel_i0(std::sqrt(lambda) * r);
      EXPECT_NEAR(w_eval({lambda}, Complex(0.0, r)), expected, 1e-12 * expected);
    }
  }
}

TEST(WLambda, RotationInvariant) {
  const double base = w_eval({1.5}, Complex(1.7, 0.0));
  for (int k = 1; k < 12; ++k) {
    EXPECT_NEAR(w_eval({1.5}, std::polar(1.7, 0.53 * k)), base, 1e-10);
  }
}

TEST(WLambda, Scaling) {
  for (double lambda : {0.25, 3.0}) {
    for (const Complex z : {Complex(0.4, 1.1), Complex(-2.0, 0.3)}) {
      EXPECT_NEAR(w_eval({lambda}, z), w_eval({1.0}, std::sqrt(lambda) * z), 1e-10);
    }
  }
}

TEST(WLambda, RadiallyIncreasing) {
  double previous = w_eval({1.0}, 0.0);
  for (int k = 1; k <= 40; ++k) {
    const double v = w_eval({1.0}, Complex(0.2 * k, 0.0));
    EXPECT_GT(v, previous);
    previous = v;
  }
}

TEST(WLambda, RejectsNonPositiveLambda) {
  EXPECT_THROW(w_eval({0.0}, 1.0), InvalidArgument);
  EXPECT_THROW(HelmholtzSolution{-1.0}.validate(), InvalidArgument);
}

TEST(Residual, Examples) {
  EXPECT_LE(std::fabs(helmholtz_residual(HelmholtzSolution{1.0}, 0.0, 1e-3)), 1e-4);
  const double coarse = helmholtz_residual(HelmholtzSolution{2.0}, Complex(1.0, 1.0), 0.1);
  const double fine = helmholtz_residual(HelmholtzSolution{2.0}, Complex(1.0, 1.0), 0.05);
  const double ratio = coarse / fine;
  EXPECT_GE(ratio, 3.5);
  EXPECT_LE(ratio, 4.5);
  EXPECT_NEAR(helmholtz_residual([](Complex) { return 1.0; }, 1.0, Complex(0.3, 0.2), 0.1), 1.0,
              1e-12);
  EXPECT_THROW(helmholtz_residual(HelmholtzSolution{1.0}, 0.0, 0.0), InvalidArgument);
}

TEST(Residual, SecondOrderEverywhere) {
  for (const Complex z : {Complex(0.5, 0.0), Complex(-1.0, 2.0), Complex(2.0, -0.5)}) {
    for (double lambda : {0.5, 1.0, 3.0}) {
      const double a = helmholtz_residual(HelmholtzSolution{lambda}, z, 0.1);
      const double b = helmholtz_residual(HelmholtzSolution{lambda}, z, 0.05);
      const double order = std::log2(std::fabs(a / b));
      EXPECT_NEAR(order, 2.0, 0.1) << z << " " << lambda;
    }
  }
}

TEST(Barrier, ZeroProblem) {
  const GridProblem p{2.0, 0.25, 1.0};
  SolveStats stats;
  const GridFunction u = barrier_solve(p, &stats);
  for (double v : u.values) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(stats.iterations, 0);
  EXPECT_TRUE(max_principle_check(p, u).ok);
}

TEST(Barrier, ConstantRhs) {
  double previous_centre = 0.0;
  for (double R : {1.0, 2.0, 4.0, 8.0}) {
    GridProblem p{R, 0.125, 1.0};
    p.rhs = [](Complex) { return 1.0; };
    SolveStats stats;
    const GridFunction u = barrier_solve(p, &stats);
    EXPECT_LE(stats.residual, kSolveTolerance);
    EXPECT_LE(discrete_residual(p, u), kSolveTolerance);
    for (double v : u.values) {
      EXPECT_GE(v, -1e-12);
      EXPECT_LE(v, 1.0 + 1e-12);
    }
    const double centre = u.at(u.n / 2, u.n / 2);
    EXPECT_GT(centre, previous_centre);
    previous_centre = centre;
    EXPECT_TRUE(max_principle_check(p, u).ok);
  }
  EXPECT_GT(previous_centre, 0.99);
}

TEST(Barrier, PerturbationWitness) {
  GridProblem p{2.0, 0.25, 1.0};
  p.rhs = [](Complex) { return 1.0; };
  GridFunction u = barrier_solve(p, nullptr);
  const std::size_t i = 5, j = 9;
  u.at(i, j) += 1.0;
  const MaxPrincipleCheck check = max_principle_check(p, u);
  EXPECT_FALSE(check.ok);
  ASSERT_TRUE(check.witness.has_value());
  EXPECT_EQ(*check.witness, Complex(u.x(j), u.y(i)));
}

TEST(Barrier, BoundedByBarrier) {
  GridProblem p{3.0, 0.125, 2.0};
  p.rhs = [](Complex z) { return std::sin(3 * z.real()) * std::cos(2 * z.imag()); };
  p.boundary = [](Complex z) { return 0.5 + 0.5 * std::cos(z.real() + z.imag()); };
  const GridFunction u = barrier_solve(p, nullptr);
  const GridFunction bound = barrier_bound(p);
  for (std::size_t k = 0; k < u.values.size(); ++k) {
    EXPECT_LE(std::fabs(u.values[k]), bound.values[k] + 1e-9) << k;
  }
  EXPECT_TRUE(max_principle_check(p, u).ok);
  // Deep inside, boundary influence has decayed well below its edge size.
  const std::size_t mid = u.n / 2;
  EXPECT_LT(bound.at(mid, mid), 1.0 / p.c + 0.1);
}

TEST(Barrier, NoInteriorMaximumWhenRhsNonPositive) {
  GridProblem p{2.0, 0.125, 1.0};
  p.rhs = [](Complex z) { return -std::exp(-std::norm(z)); };
  p.boundary = [](Complex z) { return 0.3 * z.real(); };
  const GridFunction u = barrier_solve(p, nullptr);
  double boundary_max = -1e300, interior_max = -1e300;
  for (std::size_t i = 0; i < u.n; ++i) {
    for (std::size_t j = 0; j < u.n; ++j) {
      if (u.interior(i, j)) {
        interior_max = std::max(interior_max, u.at(i, j));
      } else {
        boundary_max = std::max(boundary_max, u.at(i, j));
      }
    }
  }
  EXPECT_LE(interior_max, std::max(boundary_max, 0.0));
}

TEST(Barrier, Deterministic) {
  GridProblem p{2.0, 0.125, 1.0};
  p.rhs = [](Complex z) { return z.real() * z.imag(); };
  EXPECT_EQ(barrier_solve(p, nullptr).values, barrier_solve(p, nullptr).values);
}

TEST(Barrier, InvalidProblems) {
  EXPECT_THROW(GridProblem({1.0, 0.3, 1.0}).validate(), InvalidArgument);
  EXPECT_THROW(GridProblem({1.0, 0.25, 0.0}).validate(), InvalidArgument);
  EXPECT_THROW(GridProblem({1.0, -0.25, 1.0}).validate(), InvalidArgument);
  EXPECT_THROW(barrier_solve(GridProblem{0.0, 0.25, 1.0}, nullptr), InvalidArgument);
}

}  // namespace
