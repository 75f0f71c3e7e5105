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
#include "rpl/energy.hpp"
#include "rpl/error.hpp"
#include "rpl/kernels.hpp"
#include "rpl/polarization.hpp"

namespace rpl {
namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<double> flat(const Configuration& c) { return c.points().coords(); }

TEST(Energy, Examples) {
  EXPECT_LT(rel(energy(circle_configuration(std::vector<double>{0.0, kPi}), 2.0), 0.5), 1e-15);
  EXPECT_LT(rel(energy(circle_configuration(equally_spaced_angles(3)), 2.0), 2.0), 1e-14);
  for (std::size_t n = 2; n <= 100; ++n) {
    const Configuration c = circle_configuration(equally_spaced_angles(n));
    EXPECT_LT(rel(energy(c, 2.0), roots_of_unity_energy_p2(n)), 1e-10) << n;
    EXPECT_LT(rel(energy(c, 2.0), oracle::pair_energy(flat(c), 2, 2.0)), 1e-12) << n;
  }
}

TEST(Energy, MatchesPairSumOracle) {
  oracle::Gen g(31);
  for (const Domain& dom : {Domain::sphere(2), Domain::ball(3), Domain::segment(), Domain::sphere(3)}) {
    for (int i = 0; i < 20; ++i) {
      const Configuration c = sample_uniform(dom, static_cast<std::size_t>(g.integer(2, 40)), g.seed());
      const double p = g.uniform(0.3, 5.0);
      EXPECT_LT(rel(energy(c, p), oracle::pair_energy(flat(c), dom.ambient_dim(), p)), 1e-12) << dom.name();
    }
  }
}

TEST(Energy, Errors) {
  EXPECT_THROW(energy(circle_configuration(std::vector<double>{1.0, 1.0}), 2.0), CoincidentPointsError);
  EXPECT_THROW(energy(circle_configuration(std::vector<double>{1.0, 2.0}), 0.0), InvalidArgument);
  EXPECT_EQ(energy(circle_configuration(std::vector<double>{1.0}), 2.0), 0.0);
}

TEST(Energy, RotationInvariant) {
  oracle::Gen g(32);
  for (int i = 0; i < 50; ++i) {
    // Jittered roots of unity keep pairs apart; a near-coincident pair turns
    // coordinate rounding into a large relative change of its term.
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 30));
    std::vector<double> a = equally_spaced_angles(n);
    for (double& t : a) t += g.uniform(-0.3, 0.3) * 2 * kPi / static_cast<double>(n);
    const double shift = g.uniform(0, 2 * kPi), p = g.uniform(0.5, 4.0);
    std::vector<double> b = a;
    for (double& t : b) t += shift;
    EXPECT_LT(rel(energy(circle_configuration(b), p), energy(circle_configuration(a), p)), 1e-12);
  }
  // A rotation of S^2 about an arbitrary axis (Rodrigues).
  for (int i = 0; i < 20; ++i) {
    const Configuration c = sample_uniform(Domain::sphere(2), 25, g.seed());
    const std::vector<double> k = g.sphere_point(3);
    const double th = g.uniform(0, 2 * kPi), cs = std::cos(th), sn = std::sin(th);
    PointSet rot(3);
    for (std::size_t j = 0; j < c.size(); ++j) {
      const auto v = c[j];
      const double kv = k[0] * v[0] + k[1] * v[1] + k[2] * v[2];
      const double cr[3] = {k[1] * v[2] - k[2] * v[1], k[2] * v[0] - k[0] * v[2], k[0] * v[1] - k[1] * v[0]};
      double w[3];
      for (int a = 0; a < 3; ++a) w[a] = v[a] * cs + cr[a] * sn + k[a] * kv * (1 - cs);
      rot.push_back(w);
    }
    const double p = g.uniform(0.5, 4.0);
    EXPECT_LT(rel(energy(Configuration::projected(Domain::sphere(2), rot), p), energy(c, p)), 1e-12);
  }
}

TEST(Energy, GradientMatchesFiniteDifferences) {
  oracle::Gen g(33);
  for (int i = 0; i < 20; ++i) {
    const Configuration c = sample_uniform(Domain::ball(3), 12, g.seed());
    const double p = g.uniform(0.5, 3.0), h = 1e-5;
    PointSet pts = c.points();
    std::vector<double> grad(pts.coords().size());
    kernels::energy_gradient(pts, p, grad);
    for (std::size_t k = 0; k < grad.size(); ++k) {
      const double x0 = pts.coords()[k];
      pts.coords()[k] = x0 + h;
      const double ep = oracle::pair_energy(pts.coords(), 3, p);
      pts.coords()[k] = x0 - h;
      const double em = oracle::pair_energy(pts.coords(), 3, p);
      pts.coords()[k] = x0;
      const double fd = (ep - em) / (2 * h);
      EXPECT_LT(std::abs(grad[k] - fd), 1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(MinimizeEnergy, CircleFivePoints) {
  EnergyOptions o;
  o.structured_start = false;
  o.restarts = 4;
  const EnergyResult r = minimize_energy(Domain::circle(), 5, 2.0, o);
  EXPECT_LT(rel(r.energy, 10.0), 1e-8);
  auto a = circle_angles(r.config);
  std::sort(a.begin(), a.end());
  for (std::size_t i = 0; i + 1 < a.size(); ++i) EXPECT_NEAR(a[i + 1] - a[i], 2 * kPi / 5, 1e-4);
}

TEST(MinimizeEnergy, SphereAntipodesAndTetrahedron) {
  EnergyOptions o;
  o.restarts = 4;
  const EnergyResult two = minimize_energy(Domain::sphere(2), 2, 1.0, o);
  EXPECT_LT(rel(two.energy, 1.0), 1e-10);
  const EnergyResult tet = minimize_energy(Domain::sphere(2), 4, 2.0, o);
  EXPECT_LT(rel(tet.energy, 4.5), 1e-8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_NEAR(squared_distance(tet.config[i], tet.config[j]), 8.0 / 3.0, 1e-6);
  EXPECT_LT(tet.gradient_norm, 1e-6);
}

TEST(MinimizeEnergy, CircleMatchesRootsOfUnity) {
  EnergyOptions o;
  o.restarts = 3;
  o.structured_start = false;
  for (std::size_t n = 2; n <= 12; ++n) {
    for (double p : {1.0, 2.0, 3.0}) {
      const double exact = energy(circle_configuration(equally_spaced_angles(n)), p);
      EXPECT_LT(rel(minimize_energy(Domain::circle(), n, p, o).energy, exact), 1e-8) << n << " " << p;
    }
  }
}

TEST(MinimizeEnergy, Errors) {
  EXPECT_THROW(minimize_energy(Domain::circle(), 1, 2.0), InvalidArgument);
  EXPECT_THROW(minimize_energy(Domain::circle(), 3, -2.0), InvalidArgument);
  EnergyOptions o;
  o.restarts = 0;
  EXPECT_THROW(minimize_energy(Domain::circle(), 3, 2.0, o), InvalidArgument);
}

TEST(EnergyBound, Examples) {
  const EnergyBound three = polarization_lower_bound_from_energy(Domain::circle(), 3, 2.0);
  EXPECT_DOUBLE_EQ(three.value, 1.0);
  EXPECT_TRUE(three.certified);
  EXPECT_LE(three.value, equally_spaced_value(3, 2.0));
  EXPECT_NEAR(polarization_lower_bound_from_energy(Domain::circle(), 10, 2.0).value, 10.0 * 99.0 / 12.0 / 9.0, 1e-12);
  const EnergyBound tet = polarization_lower_bound_from_energy(Domain::sphere(2), 4, 2.0);
  EXPECT_NEAR(tet.value, 1.5, 1e-8);
  EXPECT_FALSE(tet.certified);
}

TEST(EnergyBound, BelowTheCircleOptimum) {
  for (std::size_t n = 2; n <= 50; ++n) {
    const double nd = static_cast<double>(n);
    const EnergyBound b = polarization_lower_bound_from_energy(Domain::circle(), n, 2.0);
    EXPECT_NEAR(b.value, nd * (nd + 1) / 12, 1e-12 * nd * nd);
    EXPECT_LE(b.value, equally_spaced_value(n, 2.0));
  }
}

TEST(Superadditivity, ClosedFormEnergiesAreNonnegative) {
  std::vector<double> e;
  for (std::size_t n = 2; n <= 50; ++n) e.push_back(roots_of_unity_energy_p2(n));
  const auto res = superadditivity_check(e, 2);
  ASSERT_EQ(res.size(), e.size() - 1);
  for (std::size_t i = 0; i < res.size(); ++i) {
    // (n-1)E(n+1) - (n+1)E(n) = n(n+1)(n-1)/12 for E(n) = n(n^2-1)/12.
    const double n = static_cast<double>(i + 2);
    EXPECT_NEAR(res[i], n * (n + 1) * (n - 1) / 12, 1e-9 * n * n * n);
  }
  EXPECT_TRUE(superadditivity_check(std::vector<double>{3.0}, 5).empty());
  EXPECT_TRUE(superadditivity_check(std::vector<double>{}, 5).empty());
}

TEST(Superadditivity, SphereOptimizerEnergies) {
  EnergyOptions o;
  o.restarts = 4;
  std::vector<double> e;
  for (std::size_t n = 2; n <= 8; ++n) e.push_back(minimize_energy(Domain::sphere(2), n, 1.0, o).energy);
  for (double r : superadditivity_check(e, 2)) EXPECT_GE(r, -1e-6);
}

}  // namespace
}  // namespace rpl
