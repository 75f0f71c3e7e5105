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

// Independent reference computations for the tests. Nothing here calls into
// the library: each oracle is a direct, slow, extended-precision evaluation
// of the defining sum or integral, or a literal value from a classical
// identity.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using ld = long double;
inline constexpr ld kPi = std::numbers::pi_v<long double>;

// 6 zeta(s/2) L(s/2, chi_-3): the hexagonal lattice sum over m^2 + mn + n^2.
inline constexpr double kHexP4 = 7.7111457329048964175;
inline constexpr double kHexP6 = 6.37588155282984690667;
inline constexpr double kHexP10 = 6.03143912364283921273;

inline constexpr double kZeta3 = 1.2020569031595942854;

/// zeta(p) by a partial sum plus the integral tail with trapezoid and first
/// Euler-Maclaurin corrections; error below p N^{-p-1} / 700.
inline double zeta(double p, long N = 200000) {
  ld s = 0.0L;
  for (long k = N - 1; k >= 1; --k) s += std::pow(static_cast<ld>(k), -static_cast<ld>(p));
  const ld n = N, lp = p;
  s += std::pow(n, 1 - lp) / (lp - 1) + std::pow(n, -lp) / 2 + lp * std::pow(n, -lp - 1) / 12;
  return static_cast<double>(s);
}

/// Hexagonal lattice sum over |X| <= R plus the annulus tail integral.
inline double epstein_hex(double p, int R = 200) {
  ld s = 0.0L;
  const ld R2 = static_cast<ld>(R) * R;
  for (int m = -2 * R; m <= 2 * R; ++m) {
    for (int n = -2 * R; n <= 2 * R; ++n) {
      if (m == 0 && n == 0) continue;
      const ld r2 = static_cast<ld>(m) * m + static_cast<ld>(m) * n + static_cast<ld>(n) * n;
      if (r2 <= R2) s += std::pow(r2, -static_cast<ld>(p) / 2);
    }
  }
  const ld density = 2.0L / std::sqrt(3.0L);
  s += 2 * kPi * density * std::pow(static_cast<ld>(R), 2 - static_cast<ld>(p)) / (p - 2);
  return static_cast<double>(s);
}

/// sum_j |e^{it} - e^{it_j}|^{-p} from complex differences.
inline double circle_potential(const std::vector<double>& angles, double p, double t) {
  ld s = 0.0L;
  const std::complex<ld> z = std::polar(1.0L, static_cast<ld>(t));
  for (double a : angles) s += std::pow(std::abs(z - std::polar(1.0L, static_cast<ld>(a))), -static_cast<ld>(p));
  return static_cast<double>(s);
}

/// d^2/dt^2 of sum_j (2 |sin((t - t_j)/2)|)^{-p}, termwise:
/// f'' = f [(p/4) csc^2(u) + (p^2/4) cot^2(u)] with u = (t - t_j)/2.
inline double circle_potential_d2(const std::vector<double>& angles, double p, double t) {
  ld s = 0.0L;
  for (double a : angles) {
    const ld u = (static_cast<ld>(t) - a) / 2;
    const ld sn = std::sin(u), cs = std::cos(u);
    const ld f = std::pow(2 * std::abs(sn), -static_cast<ld>(p));
    s += f * (p / (4 * sn * sn) + static_cast<ld>(p) * p / 4 * (cs * cs) / (sn * sn));
  }
  return static_cast<double>(s);
}

/// -(log|Q|)'''' = sum_j (3/8) csc^4 u - (1/4) csc^2 u, u = (t - t_j)/2.
inline double log_q_fourth(const std::vector<double>& angles, double t) {
  ld s = 0.0L;
  for (double a : angles) {
    const ld c2 = 1 / std::pow(std::sin((static_cast<ld>(t) - a) / 2), 2);
    s += 0.375L * c2 * c2 - 0.25L * c2;
  }
  return static_cast<double>(s);
}

/// sum_{k<n} [2 sin((2k+1) pi / (2n))]^{-p}.
inline double equally_spaced(std::size_t n, double p) {
  ld s = 0.0L;
  for (std::size_t k = 0; k < n; ++k) {
    s += std::pow(2 * std::sin((2 * static_cast<ld>(k) + 1) * kPi / (2 * static_cast<ld>(n))), -static_cast<ld>(p));
  }
  return static_cast<double>(s);
}

/// Ordered-pair energy of points stored row-major with the given dimension.
inline double pair_energy(const std::vector<double>& xs, int dim, double p) {
  const std::size_t n = xs.size() / static_cast<std::size_t>(dim);
  ld s = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      ld r2 = 0.0L;
      for (int k = 0; k < dim; ++k) {
        const ld t = static_cast<ld>(xs[i * dim + k]) - xs[j * dim + k];
        r2 += t * t;
      }
      s += std::pow(r2, -static_cast<ld>(p) / 2);
    }
  }
  return static_cast<double>(s);
}

/// Potential of the shifted roots t_j = pi/(2n) + 2 pi j / n at pi/(2n),
/// the optimum of the discrete problem on the 2n-th roots of unity.
inline double shifted_discrete_optimum(std::size_t n, double p) {
  std::vector<double> a(n);
  for (std::size_t j = 0; j < n; ++j) {
    a[j] = static_cast<double>(kPi / (2 * static_cast<ld>(n)) + 2 * kPi * static_cast<ld>(j) / static_cast<ld>(n));
  }
  // Minimum over the 2n test angles pi k / n, evaluated directly.
  double best = INFINITY;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    best = std::min(best, circle_potential(a, p, static_cast<double>(kPi * static_cast<ld>(k) / static_cast<ld>(n))));
  }
  return best;
}

/// Hand-rolled generators for the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::uint64_t seed() { return rng_(); }

  std::vector<double> angles(std::size_t n) {
    std::vector<double> a(n);
    for (double& t : a) t = uniform(0.0, 2.0 * std::numbers::pi);
    return a;
  }

  std::vector<double> sphere_point(int ambient) {
    std::normal_distribution<double> g;
    std::vector<double> x(static_cast<std::size_t>(ambient));
    double r = 0.0;
    do {
      r = 0.0;
      for (double& v : x) {
        v = g(rng_);
        r += v * v;
      }
    } while (r < 1e-12);
    for (double& v : x) v /= std::sqrt(r);
    return x;
  }

  std::vector<double> ball_point(int d) {
    std::vector<double> x = sphere_point(d);
    const double r = std::pow(uniform(0.0, 1.0), 1.0 / d);
    for (double& v : x) v *= r;
    return x;
  }

  // An angle at least `gap` away from every node, modulo 2 pi.
  double angle_away_from(const std::vector<double>& nodes, double gap) {
    for (;;) {
      const double t = uniform(0.0, 2.0 * std::numbers::pi);
      bool ok = true;
      for (double a : nodes) ok = ok && std::abs(std::remainder(t - a, 2.0 * std::numbers::pi)) >= gap;
      if (ok) return t;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Monte-Carlo estimate of the double integral of |x - y|^{-p} for x, y
/// uniform on the unit sphere S^2 in R^3, from `pairs` pairs. x is uniform;
/// y is placed at a stratified polar cosine about x with uniform azimuth,
/// which removes most of the variance of the log-divergent second moment.
inline double mc_sphere2_energy(double p, std::size_t pairs, std::uint64_t seed) {
  Gen g(seed);
  ld s = 0.0L;
  for (std::size_t i = 0; i < pairs; ++i) {
    const double c = -1.0 + 2.0 * (static_cast<double>(i) + g.uniform(0.0, 1.0)) / static_cast<double>(pairs);
    const std::vector<double> x = g.sphere_point(3);
    // Orthonormal frame around x.
    std::vector<double> e1 = std::abs(x[0]) < 0.9 ? std::vector<double>{1, 0, 0} : std::vector<double>{0, 1, 0};
    const double pr = e1[0] * x[0] + e1[1] * x[1] + e1[2] * x[2];
    for (int k = 0; k < 3; ++k) e1[k] -= pr * x[k];
    const double n1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
    for (double& v : e1) v /= n1;
    const std::vector<double> e2 = {x[1] * e1[2] - x[2] * e1[1], x[2] * e1[0] - x[0] * e1[2],
                                    x[0] * e1[1] - x[1] * e1[0]};
    const double phi = g.uniform(0.0, 2.0 * std::numbers::pi), sn = std::sqrt(std::max(0.0, 1.0 - c * c));
    ld r2 = 0.0L;
    for (int k = 0; k < 3; ++k) {
      const double y = c * x[k] + sn * (std::cos(phi) * e1[k] + std::sin(phi) * e2[k]);
      r2 += static_cast<ld>(x[k] - y) * (x[k] - y);
    }
    s += std::pow(r2, -static_cast<ld>(p) / 2);
  }
  return static_cast<double>(s / static_cast<ld>(pairs));
}

/// Same for the unit circle: x uniform, y at a stratified angle offset.
inline double mc_circle_energy(double p, std::size_t pairs, std::uint64_t seed) {
  Gen g(seed);
  ld s = 0.0L;
  for (std::size_t i = 0; i < pairs; ++i) {
    const double a = g.uniform(0.0, 2.0 * std::numbers::pi);
    const double off = 2.0 * std::numbers::pi * (static_cast<double>(i) + g.uniform(0.0, 1.0)) / static_cast<double>(pairs);
    s += std::pow(std::abs(std::polar(1.0L, static_cast<ld>(a)) - std::polar(1.0L, static_cast<ld>(a + off))),
                  -static_cast<ld>(p));
  }
  return static_cast<double>(s / static_cast<ld>(pairs));
}

}  // namespace oracle
