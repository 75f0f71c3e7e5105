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

#pragma once

#include <string>
#include <vector>

#include "rpl/domain.hpp"

namespace rpl {

/// Gamma function for x > 0 (Lanczos, g = 7, nine terms).
double gamma(double x);
double log_gamma(double x);

/// Riemann zeta for p > 1 by Euler-Maclaurin summation.
double riemann_zeta(double p);

struct LatticeSum {
  double value = 0.0;
  double radius = 0.0;       // truncation radius
  double error_bound = 0.0;  // absolute bound on the truncation error
};

/// Epstein zeta of the hexagonal lattice m(1,0) + n(1/2, sqrt(3)/2):
/// sum over nonzero X of |X|^{-p}, p > 2. The direct sum over |X| <= R is
/// completed by the continuum tail 2 pi rho R^{2-p} / (p - 2); R is the
/// smallest radius whose lattice-count error bound meets rel_tol, capped at
/// kMaxLatticeRadius.
inline constexpr double kMaxLatticeRadius = 3000.0;
LatticeSum epstein_zeta_hex_detail(double p, double rel_tol = 1e-10);
double epstein_zeta_hex(double p);

struct GeometricConstants {
  int d = 0;
  double beta_d = 0.0;       // volume of the unit d-ball
  double sphere_area = 0.0;  // surface measure of S^d
  double tau_d = 0.0;        // beta_d / sphere_area

  static GeometricConstants of(int d);
};

double unit_ball_volume(int d);
double sphere_area(int d);
double tau(int d);

/// Minimal continuous p-energy of the domain. Sphere (and circle): 0 < p < d.
/// Ball: d - 2 <= p < d. Throws RangeError outside those ranges and
/// UnavailableConstantError for the segment.
double wiener_constant(const Domain& domain, double p);

enum class BoundKind { lower, upper };

struct BoundValue {
  double value = 0.0;
  BoundKind kind = BoundKind::lower;
  std::string source;
  // Depends on the unproven hexagonal-lattice value of C_{p,2}.
  bool conjectural = false;
  // A liminf/limit statement evaluated at finite n rather than a bound that
  // holds for every n.
  bool asymptotic = false;
};

/// Leading energy constant C_{p,d} for p > d: exact 2 zeta(p) for d = 1,
/// the conjectured hexagonal-lattice value for d = 2, and the packing lower
/// bound for d >= 3 (only when (p - d)/2 is not an integer).
struct EnergyConstant {
  double value = 0.0;
  bool conjectural = false;
  bool is_lower_bound = false;
  std::string source;
};
EnergyConstant energy_constant(int d, double p);

/// Preferred bound of the requested kind for M_n^p(domain). Upper bounds
/// need n >= 3 (RangeError otherwise) except the exact superharmonic ball
/// case; lower bounds throw UnavailableConstantError when nothing applies.
BoundValue polarization_bound(const Domain& domain, double p, long n, BoundKind kind);
/// Every applicable bound, preferred ones first within each kind.
std::vector<BoundValue> all_bounds(const Domain& domain, double p, long n);

/// n^2/4 for p = 2 and n^4/48 + n^2/24 for p = 4.
double chebyshev_closed_form(long n, int p);

/// 2 (2^p - 1) zeta(p): the circle value forced on the constant of the
/// polarization analogue of the Poppy-seed Bagel limit.
double conjectured_sigma_p1(double p);

std::string to_string(BoundKind kind);

}  // namespace rpl
