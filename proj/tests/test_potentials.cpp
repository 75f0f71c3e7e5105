/* Copyright 2026 The rieszpol Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rpl/domain.hpp"
#include "rpl/error.hpp"
#include "rpl/potentials.hpp"

namespace rpl {
namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TEST(RieszPotential, AntipodalPairAtRightAngle) {
  const Configuration c = circle_configuration(std::vector<double>{0.0, kPi});
  const double x[2] = {0.0, 1.0};
  EXPECT_NEAR(riesz_potential(c, 4.0, x), 0.5, 1e-15);
}

TEST(RieszPotential, CopiesOfTheCenterSeenFromTheBoundary) {
  for (int d : {2, 3, 5}) {
    PointSet pts(d);
    const std::vector<double> o(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < 7; ++i) pts.push_back(o);
    const Configuration c(Domain::ball(d), pts);
    oracle::Gen g(static_cast<std::uint64_t>(d));
    for (double p : {0.5, 1.0, 3.0}) EXPECT_NEAR(riesz_potential(c, p, g.sphere_point(d)), 7.0, 1e-13);
  }
}

TEST(RieszPotential, InfiniteAtANode) {
  const Configuration c = sample_uniform(Domain::sphere(2), 5, 1);
  EXPECT_TRUE(std::isinf(riesz_potential(c, 2.0, c[0])));
  const double out[3] = {2.0, 0.0, 0.0};
  EXPECT_THROW(riesz_potential(c, 2.0, out), InvalidArgument);
}

TEST(RieszPotential, GradientMatchesFiniteDifferences) {
  const Configuration c = sample_uniform(Domain::ball(3), 9, 2);
  std::vector<double> x = {0.3, -0.2, 0.5}, g(3);
  const double p = 2.5;
  const double v = riesz_potential_gradient(c.points(), p, x, g);
  EXPECT_LT(rel(v, riesz_potential(c, p, x)), 1e-14);
  for (int k = 0; k < 3; ++k) {
    auto xp = x, xm = x;
    xp[k] += 1e-6;
    xm[k] -= 1e-6;
    const double fd = (riesz_potential(c, p, xp) - riesz_potential(c, p, xm)) / 2e-6;
    EXPECT_NEAR(g[k], fd, 1e-6 * (1 + std::abs(fd)));
  }
}

TEST(CircleA, Examples) {
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto a = equally_spaced_angles(n);
    EXPECT_LT(rel(circle_A(a, 2.0, kPi / n), n * n / 4.0), 1e-13);
  }
  EXPECT_NEAR(circle_A(std::vector<double>{0.0}, 1.0, kPi), 0.5, 1e-16);
}

TEST(CircleA, AgreesWithAmbientDistances) {
  oracle::Gen g(11);
  for (int i = 0; i < 1000; ++i) {
    const auto a = g.angles(static_cast<std::size_t>(g.integer(1, 15)));
    const double t = g.angle_away_from(a, 1e-6), p = g.uniform(0.2, 6.0);
    ASSERT_LT(rel(circle_A(a, p, t), oracle::circle_potential(a, p, t)), 1e-12);
    const double x[2] = {std::cos(t), std::sin(t)};
    ASSERT_LT(rel(circle_A(a, p, t), riesz_potential(circle_configuration(a), p, x)), 1e-12);
  }
}

TEST(CircleA, DerivativesMatchFiniteDifferencesAndOracle) {
  oracle::Gen g(12);
  for (int i = 0; i < 200; ++i) {
    const auto a = g.angles(static_cast<std::size_t>(g.integer(1, 10)));
    const double t = g.angle_away_from(a, 0.05), p = g.uniform(0.5, 5.0), h = 1e-5;
    const double fd1 = (circle_A(a, p, t + 1e-6) - circle_A(a, p, t - 1e-6)) / 2e-6;
    EXPECT_NEAR(circle_A_d1(a, p, t), fd1, 1e-6 * (1 + std::abs(fd1)));
    const double fd2 = (circle_A_d1(a, p, t + h) - circle_A_d1(a, p, t - h)) / (2 * h);
    const double d2 = circle_A_d2(a, p, t);
    EXPECT_LT(std::abs(d2 - fd2), 1e-6 * std::max(std::abs(d2), circle_A(a, p, t)));
    EXPECT_LT(rel(d2, oracle::circle_potential_d2(a, p, t)), 1e-10);
  }
}

TEST(Recurrence, Examples) {
  EXPECT_NEAR(circle_A(std::vector<double>{0.0}, 4.0, kPi), 1.0 / 16, 1e-16);
  EXPECT_LT(circle_A_recurrence_check(std::vector<double>{0.0}, 2.0, kPi), 1e-14);
  const auto a4 = equally_spaced_angles(4);
  EXPECT_LT(rel(circle_A(a4, 4.0, kPi / 4), 6.0), 1e-14);
  EXPECT_LT(circle_A_recurrence_check(a4, 2.0, kPi / 4), 1e-13);
}

TEST(Recurrence, ResidualSmallOnRandomConfigs) {
  oracle::Gen g(13);
  for (int i = 0; i < 100; ++i) {
    const auto a = g.angles(static_cast<std::size_t>(g.integer(1, 12)));
    const double t = g.angle_away_from(a, 2e-3);
    for (double p : {1.0, 2.0, 3.5}) {
      EXPECT_LE(circle_A_recurrence_check(a, p, t), 1e-9);
      // Independent: termwise second derivative from the oracle.
      const double rhs = (oracle::circle_potential_d2(a, p, t) + p * p / 4 * oracle::circle_potential(a, p, t)) / (p * p + p);
      EXPECT_LT(rel(rhs, oracle::circle_potential(a, p + 2, t)), 1e-9);
    }
  }
}

TEST(Recurrence, FullPSquaredCoefficientDoesNotBalance) {
  // With p^2 A_p in place of (p^2/4) A_p the identity is off by O(1).
  const std::vector<double> a = {0.0};
  const double p = 2.0, t = kPi;
  const double wrong = (oracle::circle_potential_d2(a, p, t) + p * p * oracle::circle_potential(a, p, t)) / (p * p + p);
  EXPECT_GT(rel(wrong, circle_A(a, p + 2, t)), 0.5);
}

TEST(Recurrence, ProximityError) {
  EXPECT_THROW(circle_A_recurrence_check(std::vector<double>{1.0}, 2.0, 1.0 + 5e-4), ProximityError);
  EXPECT_THROW(log_derivative_functional(std::vector<double>{1.0}, 4, 1.0 - 5e-4), ProximityError);
}

TEST(LogDerivative, CscPolynomials) {
  EXPECT_EQ(csc2_derivative_poly(0), (std::vector<double>{1, 0, 1}));
  EXPECT_EQ(csc2_derivative_poly(1), (std::vector<double>{0, -1, 0, -1}));
  EXPECT_THROW(csc2_derivative_poly(-1), InvalidArgument);
}

TEST(LogDerivative, LowOrderIdentities) {
  oracle::Gen g(14);
  for (int i = 0; i < 200; ++i) {
    const auto a = g.angles(static_cast<std::size_t>(g.integer(1, 12)));
    const double t = g.angle_away_from(a, 2e-3);
    EXPECT_LT(rel(log_derivative_functional(a, 2, t), circle_A(a, 2.0, t)), 1e-12);
    const double m4 = log_derivative_functional(a, 4, t);
    EXPECT_LT(rel(m4, 6 * circle_A(a, 4.0, t) - circle_A(a, 2.0, t)), 1e-9);
    EXPECT_LT(rel(m4, oracle::log_q_fourth(a, t)), 1e-10);
  }
  for (std::size_t n = 1; n <= 16; ++n) {
    EXPECT_LT(rel(log_derivative_functional(equally_spaced_angles(n), 2, kPi / n), n * n / 4.0), 1e-13);
  }
}

TEST(LogDerivative, SixthOrderIsSecondDifferenceOfFourth) {
  oracle::Gen g(15);
  for (int i = 0; i < 50; ++i) {
    const auto a = g.angles(static_cast<std::size_t>(g.integer(1, 6)));
    const double t = g.angle_away_from(a, 0.2), h = 2e-3;
    auto f = [&](double s) { return log_derivative_functional(a, 4, s); };
    // Fourth-order five-point stencil.
    const double fd = (-f(t + 2 * h) + 16 * f(t + h) - 30 * f(t) + 16 * f(t - h) - f(t - 2 * h)) / (12 * h * h);
    EXPECT_LT(rel(log_derivative_functional(a, 6, t), fd), 1e-6);
  }
}

TEST(LogDerivative, RejectsOddOrder) {
  EXPECT_THROW(log_derivative_functional(std::vector<double>{0.0}, 3, 1.0), InvalidArgument);
  EXPECT_THROW(log_derivative_functional(std::vector<double>{0.0}, 0, 1.0), InvalidArgument);
}

TEST(LogQ, DerivativesMatchFiniteDifferences) {
  oracle::Gen g(16);
  for (int i = 0; i < 100; ++i) {
    const auto a = g.angles(static_cast<std::size_t>(g.integer(1, 9)));
    const double t = g.angle_away_from(a, 0.05);
    long double direct = 0;
    for (double aj : a) direct += std::log(std::abs(std::sin((static_cast<long double>(t) - aj) / 2)));
    EXPECT_NEAR(log_abs_Q(a, t), static_cast<double>(direct), 1e-12);
    const double h = 1e-5;
    EXPECT_NEAR(log_abs_Q_d1(a, t), (log_abs_Q(a, t + h) - log_abs_Q(a, t - h)) / (2 * h), 1e-5);
    EXPECT_NEAR(log_abs_Q_d2(a, t), (log_abs_Q_d1(a, t + h) - log_abs_Q_d1(a, t - h)) / (2 * h),
                1e-5 * (1 + std::abs(log_abs_Q_d2(a, t))));
  }
}

TEST(ProductMax, Examples) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto a = equally_spaced_angles(n);
    const double t0 = product_max_point(a);
    EXPECT_NEAR(std::remainder(t0 - kPi / n, 2 * kPi / n), 0.0, 1e-10);
    // |prod sin| over n equally spaced nodes peaks at 2^{1-n}.
    EXPECT_NEAR(log_abs_Q(a, t0), (1.0 - static_cast<double>(n)) * std::log(2.0), 1e-12);
  }
  EXPECT_NEAR(product_max_point(std::vector<double>{0.0}), kPi, 1e-12);
  // Brute force over a million-point grid.
  const std::vector<double> a = {0.0, kPi / 2};
  double best = -INFINITY, arg = 0;
  for (int k = 0; k < 1000000; ++k) {
    const double t = 2 * kPi * k / 1e6, v = log_abs_Q(a, t);
    if (v > best) best = v, arg = t;
  }
  EXPECT_NEAR(product_max_point(a), 5 * kPi / 4, 1e-10);
  EXPECT_NEAR(arg, 5 * kPi / 4, 1e-5);
}

TEST(ProductMax, StationaryConcaveAndGlobal) {
  oracle::Gen g(17);
  for (int i = 0; i < 300; ++i) {
    const auto a = g.angles(static_cast<std::size_t>(g.integer(1, 12)));
    const double t0 = product_max_point(a);
    EXPECT_LT(std::abs(log_abs_Q_d1(a, t0)), 1e-8);
    EXPECT_LE(log_abs_Q_d2(a, t0), 0.0);
    const double v0 = log_abs_Q(a, t0);
    for (int k = 0; k < 5000; ++k) ASSERT_LE(log_abs_Q(a, 2 * kPi * k / 5000.0), v0 + 1e-12);
  }
}

TEST(ProductMax, RepeatedNodes) {
  const std::vector<double> a = {1.0, 1.0, 1.0 + 2 * kPi};
  EXPECT_NEAR(product_max_point(a), 1.0 + kPi, 1e-10);
  EXPECT_LE(distinct_sorted_angles(a).size(), 2u);
  EXPECT_EQ(distinct_sorted_angles(std::vector<double>{3.0, 1.0, 3.0, -1.0}).size(), 3u);
  EXPECT_THROW(product_max_point(std::vector<double>{}), InvalidArgument);
}

}  // namespace
}  // namespace rpl
