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

// Randomized invariants. Each generator draws from a fixed seed, so a failure
// reproduces exactly.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>

#include "oracles.hpp"
#include "rpl/cli.hpp"
#include "rpl/constants.hpp"
#include "rpl/energy.hpp"
#include "rpl/polarization.hpp"
#include "rpl/potentials.hpp"

namespace rpl {
namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TEST(Property, EquallySpacedBeatsEveryCircleConfiguration) {
  oracle::Gen g(61);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 10));
    const double p = g.uniform(0.3, 6.0);
    const PolarizationResult r = inner_min(circle_configuration(g.angles(n)), p, 1e-10);
    EXPECT_LE(r.value - r.tolerance, equally_spaced_value(n, p) * (1 + 1e-12)) << n << " " << p;
  }
}

TEST(Property, CircleMinimumIsRotationInvariant) {
  oracle::Gen g(62);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 9));
    const double p = g.uniform(0.5, 5.0), shift = g.uniform(-kPi, kPi);
    auto a = g.angles(n);
    const double v0 = inner_min(circle_configuration(a), p, 1e-12).value;
    for (double& t : a) t += shift;
    EXPECT_LT(rel(inner_min(circle_configuration(a), p, 1e-12).value, v0), 1e-9);
  }
}

TEST(Property, PotentialIgnoresNodeOrder) {
  oracle::Gen g(63);
  for (int i = 0; i < 200; ++i) {
    const Configuration c = sample_uniform(Domain::sphere(2), static_cast<std::size_t>(g.integer(2, 20)), g.seed());
    std::vector<std::size_t> perm(c.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), g.engine());
    PointSet q(3);
    for (std::size_t j : perm) q.push_back(c[j]);
    const Configuration shuffled(Domain::sphere(2), q);
    const std::vector<double> x = g.sphere_point(3);
    const double p = g.uniform(0.5, 4.0);
    EXPECT_LT(rel(riesz_potential(shuffled, p, x), riesz_potential(c, p, x)), 1e-13);
    EXPECT_LT(rel(energy(shuffled, p), energy(c, p)), 1e-13);
  }
}

TEST(Property, AddingAPointRaisesTheMinimum) {
  oracle::Gen g(64);
  for (const Domain& dom : {Domain::circle(), Domain::segment(), Domain::sphere(2)}) {
    for (int i = 0; i < 20; ++i) {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
      const double p = g.uniform(0.5, 4.0);
      const Configuration big = sample_uniform(dom, n + 1, g.seed());
      PointSet small(big.points().dim());
      for (std::size_t j = 0; j < n; ++j) small.push_back(big[j]);
      const PolarizationResult a = inner_min(Configuration(dom, small), p, 1e-8);
      const PolarizationResult b = inner_min(big, p, 1e-8);
      EXPECT_LE(a.value - a.tolerance, b.value + b.tolerance) << dom.name();
    }
  }
}

TEST(Property, MinimumBelowTheEquilibriumAverage) {
  // For p < d the average of U over the normalized surface measure is
  // n W_p, so the minimum cannot exceed it.
  oracle::Gen g(65);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 8));
    const double p2 = g.uniform(0.2, 1.9), p1 = g.uniform(0.1, 0.9);
    const PolarizationResult s = inner_min(sample_uniform(Domain::sphere(2), n, g.seed()), p2, 1e-7);
    EXPECT_LE(s.value - s.tolerance, n * wiener_constant(Domain::sphere(2), p2) * (1 + 1e-12));
    const PolarizationResult c = inner_min(circle_configuration(g.angles(n)), p1, 1e-10);
    EXPECT_LE(c.value - c.tolerance, n * wiener_constant(Domain::circle(), p1) * (1 + 1e-12));
  }
}

TEST(Property, ProductMaxPointIsGlobal) {
  oracle::Gen g(66);
  for (int i = 0; i < 300; ++i) {
    const auto a = g.angles(static_cast<std::size_t>(g.integer(1, 12)));
    const double best = log_abs_Q(a, product_max_point(a));
    for (int k = 0; k < 50; ++k) EXPECT_LE(log_abs_Q(a, g.uniform(0, 2 * kPi)), best + 1e-12);
  }
}

TEST(Property, DiscreteNeverExceedsItsOptimum) {
  oracle::Gen g(67);
  for (int i = 0; i < 3000; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 12));
    const double p = g.uniform(0.2, 6.0);
    EXPECT_LE(discrete_polarization(g.angles(n), n, p), discrete_optimum(n, p) * (1 + 1e-13));
  }
}

TEST(Property, GammaRecurrence) {
  oracle::Gen g(68);
  for (int i = 0; i < 1000; ++i) {
    const double x = g.uniform(0.05, 30.0);
    EXPECT_LT(rel(gamma(x + 1), x * gamma(x)), 1e-13);
    EXPECT_LT(std::abs(log_gamma(x) - std::log(gamma(x))), 1e-12 * std::max(1.0, std::abs(log_gamma(x))));
  }
}

TEST(Property, CapGrowsAndAnnulusShrinksWithRadius) {
  oracle::Gen g(69);
  for (int i = 0; i < 200; ++i) {
    const int d = g.integer(1, 4);
    const double r1 = g.uniform(0.01, 1.98), r2 = g.uniform(r1, 1.99), p = g.uniform(0.5, 5.0);
    EXPECT_LE(cap_measure(d, r1), cap_measure(d, r2) + 1e-15);
    EXPECT_GE(annulus_potential_integral(d, p, r1), annulus_potential_integral(d, p, r2) - 1e-15);
  }
}

TEST(Property, NetsAreSeparatedAndCover) {
  oracle::Gen g(70);
  for (int i = 0; i < 6; ++i) {
    const Domain dom = i % 2 == 0 ? Domain::sphere(2) : Domain::ball(2);
    const double delta = g.uniform(0.4, 1.0);
    const Configuration net = maximal_delta_net(dom, delta, g.seed());
    for (std::size_t a = 0; a < net.size(); ++a)
      for (std::size_t b = a + 1; b < net.size(); ++b) EXPECT_GT(std::sqrt(squared_distance(net[a], net[b])), delta);
    const Configuration probe = sample_uniform(dom, 5000, g.seed());
    for (std::size_t k = 0; k < probe.size(); ++k) {
      double m = INFINITY;
      for (std::size_t a = 0; a < net.size(); ++a) m = std::min(m, squared_distance(net[a], probe[k]));
      EXPECT_LE(std::sqrt(m), delta * (1 + 1e-9));
    }
  }
}

TEST(Property, RangeValuesAreSortedAndBounded) {
  oracle::Gen g(71);
  for (int i = 0; i < 2000; ++i) {
    cli::NSpec s;
    s.lo = g.integer(1, 5000);
    s.hi = s.lo + g.integer(1, 1000000);
    s.scale = g.integer(0, 1) ? cli::NSpec::Scale::log : cli::NSpec::Scale::lin;
    s.count = g.integer(0, 1) ? g.integer(2, 40) : 0;
    if (s.scale == cli::NSpec::Scale::lin && s.count == 0) s.hi = s.lo + g.integer(1, 200);
    const auto v = s.values();
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front(), s.lo);
    EXPECT_EQ(v.back(), s.hi);
    for (std::size_t k = 1; k < v.size(); ++k) EXPECT_GT(v[k], v[k - 1]);
    EXPECT_EQ(cli::NSpec::parse(s.print()), s);
  }
}

TEST(Property, EnergyBoundNeverExceedsTheCircleOptimum) {
  oracle::Gen g(72);
  for (int i = 0; i < 200; ++i) {
    // Roots of unity minimize the circle energy for every p, and the minimal
    // energy over n - 1 bounds the max-min value from below.
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 12));
    const double p = g.uniform(0.5, 4.0);
    const double e = energy(circle_configuration(equally_spaced_angles(n)), p);
    EXPECT_LE(e / static_cast<double>(n - 1), equally_spaced_value(n, p) * (1 + 1e-12));
  }
}

}  // namespace
}  // namespace rpl
