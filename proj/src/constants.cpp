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

#include "rpl/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rpl/error.hpp"
#include "rpl/kernels.hpp"

namespace rpl {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2j} for j = 1..12.
constexpr std::array<double, 12> kBernoulli = {
    1.0 / 6.0,        -1.0 / 30.0,     1.0 / 42.0,        -1.0 / 30.0,
    5.0 / 66.0,       -691.0 / 2730.0, 7.0 / 6.0,         -3617.0 / 510.0,
    43867.0 / 798.0,  -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0};

// Lanczos series for Gamma(z + 1), z >= -0.5.
double lanczos_log_gamma_shifted(double z) {
  double a = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) a += kLanczos[k] / (z + static_cast<double>(k));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

std::string fmt_num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

double gamma(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: argument must be positive, got " + fmt_num(x));
  if (x < 0.5) return gamma(x + 1.0) / x;
  // Small integers and half-integers by recurrence, so ratios such as
  // Gamma(3/2)/Gamma(3/2) and Gamma(1) come out exact.
  if (x <= 24.0 && std::floor(2.0 * x) == 2.0 * x) {
    double g = (std::floor(x) == x) ? 1.0 : std::sqrt(kPi);
    for (double k = (std::floor(x) == x) ? 1.0 : 0.5; k < x; k += 1.0) g *= k;
    return g;
  }
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) a += kLanczos[k] / (z + static_cast<double>(k));
  const double t = z + kLanczosG + 0.5;
  if (x < 140.0) return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
  return std::exp(lanczos_log_gamma_shifted(z));
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + fmt_num(x));
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  return lanczos_log_gamma_shifted(x - 1.0);
}

double riemann_zeta(double p) {
  if (!(p > 1.0)) throw DomainError("riemann_zeta: requires p > 1, got " + fmt_num(p));
  constexpr int kTerms = 16;
  const double n = kTerms;
  double head = 0.0;
  for (int k = kTerms - 1; k >= 1; --k) head += std::pow(static_cast<double>(k), -p);
  const double n_pow = std::pow(n, -p);
  double tail = n * n_pow / (p - 1.0) + 0.5 * n_pow;
  // fact = p (p+1) ... (p + 2j - 2) n^{-p-2j+1}
  double fact = p * n_pow / n;
  double factorial = 2.0;
  for (std::size_t j = 0; j < kBernoulli.size(); ++j) {
    tail += kBernoulli[j] / factorial * fact;
    const double a = p + 2.0 * static_cast<double>(j) + 1.0;
    fact *= a * (a + 1.0) / (n * n);
    factorial *= (2.0 * static_cast<double>(j) + 3.0) * (2.0 * static_cast<double>(j) + 4.0);
  }
  return head + tail;
}

LatticeSum epstein_zeta_hex_detail(double p, double rel_tol) {
  if (!(p > 2.0)) throw DomainError("epstein_zeta_hex: requires p > 2, got " + fmt_num(p));
  // Lattice density and Voronoi circumradius.
  const double rho = 2.0 / std::sqrt(3.0);
  const double delta = 1.0 / std::sqrt(3.0);
  // |N(r) - pi rho r^2| <= pi rho (2 r delta + delta^2) bounds the error of
  // replacing the lattice tail by its continuum integral.
  auto bound = [&](double r) {
    return kPi * rho * (2.0 * delta * std::pow(r, 1.0 - p) * (1.0 + p / (p - 1.0)) + 2.0 * delta * delta * std::pow(r, -p));
  };
  // The six unit vectors alone contribute 6.
  const double target = rel_tol * 6.0;
  double radius = 16.0;
  while (radius < kMaxLatticeRadius && bound(radius) > target) radius *= 1.25;
  radius = std::min(radius, kMaxLatticeRadius);

  LatticeSum out;
  out.radius = radius;
  out.value = kernels::hex_lattice_sum(p, radius) + 2.0 * kPi * rho * std::pow(radius, 2.0 - p) / (p - 2.0);
  out.error_bound = bound(radius);
  return out;
}

double epstein_zeta_hex(double p) { return epstein_zeta_hex_detail(p).value; }

double unit_ball_volume(int d) {
  if (d < 1) throw DomainError("unit_ball_volume: d must be positive");
  return std::pow(kPi, 0.5 * d) / gamma(0.5 * d + 1.0);
}

double sphere_area(int d) {
  if (d < 1) throw DomainError("sphere_area: d must be positive");
  return 2.0 * std::pow(kPi, 0.5 * (d + 1)) / gamma(0.5 * (d + 1));
}

double tau(int d) {
  if (d < 1) throw DomainError("tau: d must be positive");
  return gamma(0.5 * (d + 1)) / (d * std::sqrt(kPi) * gamma(0.5 * d));
}

GeometricConstants GeometricConstants::of(int d) {
  return {d, unit_ball_volume(d), rpl::sphere_area(d), tau(d)};
}

double wiener_constant(const Domain& domain, double p) {
  const int d = domain.dim();
  if (!(p > 0.0)) throw RangeError("wiener_constant: p must be positive");
  switch (domain.kind()) {
    case DomainKind::circle:
    case DomainKind::sphere:
      if (!(p < d)) throw RangeError("wiener_constant: sphere formula needs 0 < p < d");
      return std::pow(2.0, d - p - 1.0) * gamma(0.5 * (d + 1)) * gamma(0.5 * (d - p)) /
             (std::sqrt(kPi) * gamma(d - 0.5 * p));
    case DomainKind::ball:
      if (!(p < d) || p < d - 2.0) throw RangeError("wiener_constant: ball formula needs d - 2 <= p < d");
      return gamma(0.5 * (d - p)) * gamma(0.5 * p + 1.0) / gamma(0.5 * d);
    case DomainKind::segment:
      break;
  }
  throw UnavailableConstantError("wiener_constant: no closed form for the segment");
}

EnergyConstant energy_constant(int d, double p) {
  if (!(p > d)) throw RangeError("energy_constant: requires p > d");
  if (d == 1) return {2.0 * riemann_zeta(p), false, false, "zeta"};
  if (d == 2) {
    return {std::pow(std::sqrt(3.0) / 2.0, 0.5 * p) * epstein_zeta_hex(p), true, false, "hex-lattice"};
  }
  if (near_integer(0.5 * (p - d))) {
    throw UnavailableConstantError("energy_constant: packing bound needs (p - d)/2 non-integer");
  }
  const double ratio = gamma(1.0 + 0.5 * (p - d)) / gamma(1.0 + 0.5 * p);
  return {d * std::pow(kPi, 0.5 * p) / (p - d) * std::pow(ratio, p / d), false, true, "packing-bound"};
}

namespace {

std::vector<BoundValue> upper_bounds(const Domain& domain, double p, long n) {
  const int d = domain.dim();
  const double nd = static_cast<double>(n);
  std::vector<BoundValue> out;
  auto need_three = [&] {
    if (n < 3) throw RangeError("polarization_bound: covering upper bounds need n >= 3");
  };
  switch (domain.kind()) {
    case DomainKind::circle:
    case DomainKind::sphere: {
      const double t = tau(d);
      if (p > d) {
        need_three();
        out.push_back({std::pow(nd * p * t / (p - d), p / d), BoundKind::upper, "sphere-covering:p>d", false, false});
      } else if (p == d) {
        need_three();
        const double ln = std::log(nd);
        const double v = t * nd * (ln + std::log(ln) + std::log(std::pow(2.0, d) * t)) / (1.0 - 1.0 / ln);
        out.push_back({v, BoundKind::upper, "sphere-covering:p=d", false, false});
      } else {
        need_three();
        out.push_back({nd * wiener_constant(domain, p), BoundKind::upper, "sphere-equilibrium:p<d", false, false});
      }
      break;
    }
    case DomainKind::ball:
      if (p > d) {
        need_three();
        out.push_back({std::pow(p * nd / (p - d), p / d), BoundKind::upper, "ball-covering:p>d", false, false});
      } else if (p == d) {
        need_three();
        const double ln = std::log(nd);
        const double v = nd * (ln + std::log(ln) + d * std::log(2.0)) / (1.0 - 1.0 / ln);
        out.push_back({v, BoundKind::upper, "ball-covering:p=d", false, false});
      } else if (p <= d - 2.0) {
        out.push_back({nd, BoundKind::upper, "ball-superharmonic:p<=d-2", false, false});
      } else {
        need_three();
        out.push_back({nd * wiener_constant(domain, p), BoundKind::upper, "ball-equilibrium:d-2<p<d", false, false});
      }
      break;
    case DomainKind::segment:
      throw UnavailableConstantError("polarization_bound: no explicit upper bound for the segment");
  }
  return out;
}

std::vector<BoundValue> lower_bounds(const Domain& domain, double p, long n) {
  const int d = domain.dim();
  const double nd = static_cast<double>(n);
  std::vector<BoundValue> out;
  if (domain.kind() == DomainKind::ball) {
    if (p > d && n >= (1L << d)) {
      out.push_back({std::pow(4.0, -p) * std::pow(nd, p / d), BoundKind::lower, "ball-delta-net", false, false});
    }
    if (p <= d - 2.0) {
      out.push_back({nd, BoundKind::lower, "ball-superharmonic:p<=d-2", false, false});
    } else if (p < d) {
      out.push_back({nd, BoundKind::lower, "ball-center", false, false});
    }
  }
  if (p > d) {
    try {
      const EnergyConstant c = energy_constant(d, p);
      const double v = c.value / std::pow(domain.hausdorff_measure(), p / d) * std::pow(nd, p / d);
      out.push_back({v, BoundKind::lower, "energy-asymptotics:" + c.source, c.conjectural, true});
    } catch (const UnavailableConstantError&) {
    }
  } else if (p == d) {
    double coeff = 0.0;
    switch (domain.kind()) {
      case DomainKind::circle:
      case DomainKind::sphere: coeff = tau(d); break;
      case DomainKind::ball: coeff = 1.0; break;
      case DomainKind::segment: coeff = unit_ball_volume(1) / domain.hausdorff_measure(); break;
    }
    out.push_back({coeff * nd * std::log(nd), BoundKind::lower, "energy-asymptotics:p=d", false, true});
  }
  return out;
}

}  // namespace

std::vector<BoundValue> all_bounds(const Domain& domain, double p, long n) {
  if (!(p > 0.0)) throw RangeError("polarization_bound: p must be positive");
  if (n < 1) throw RangeError("polarization_bound: n must be positive");
  std::vector<BoundValue> out = lower_bounds(domain, p, n);
  try {
    auto up = upper_bounds(domain, p, n);
    out.insert(out.end(), up.begin(), up.end());
  } catch (const RangeError&) {
  } catch (const UnavailableConstantError&) {
  }
  return out;
}

BoundValue polarization_bound(const Domain& domain, double p, long n, BoundKind kind) {
  if (!(p > 0.0)) throw RangeError("polarization_bound: p must be positive");
  if (n < 1) throw RangeError("polarization_bound: n must be positive");
  if (kind == BoundKind::upper) return upper_bounds(domain, p, n).front();
  auto lows = lower_bounds(domain, p, n);
  if (lows.empty()) {
    throw UnavailableConstantError("polarization_bound: no lower bound for " + domain.name() + " at p = " + fmt_num(p));
  }
  return lows.front();
}

double chebyshev_closed_form(long n, int p) {
  if (n < 1) throw DomainError("chebyshev_closed_form: n must be positive");
  const double nd = static_cast<double>(n);
  if (p == 2) return nd * nd / 4.0;
  if (p == 4) return nd * nd * nd * nd / 48.0 + nd * nd / 24.0;
  throw UnsupportedExponentError("chebyshev_closed_form: only p = 2 and p = 4 have closed forms");
}

double conjectured_sigma_p1(double p) {
  if (!(p > 1.0)) throw DomainError("conjectured_sigma_p1: requires p > 1");
  return 2.0 * (std::pow(2.0, p) - 1.0) * riemann_zeta(p);
}

std::string to_string(BoundKind kind) { return kind == BoundKind::lower ? "lower" : "upper"; }

}  // namespace rpl
