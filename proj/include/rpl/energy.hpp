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

#include <cstdint>
#include <span>
#include <vector>

#include "rpl/domain.hpp"

namespace rpl {

// Pairs closer than this are treated as coincident.
inline constexpr double kCoincidenceDistance = 1e-9;

/// Ordered-pair Riesz energy sum_{j != k} |x_j - x_k|^{-p}.
/// Throws CoincidentPointsError when two points are closer than 1e-9.
double energy(const Configuration& config, double p);

struct EnergyOptions {
  int restarts = 8;
  std::uint64_t seed = 1;
  // Stop once the projected gradient norm falls below gradient_tol * energy.
  double gradient_tol = 1e-12;
  int max_iterations = 20000;
  // Restart 0 uses equally spaced points (circle, segment) or a Fibonacci
  // spiral (sphere d = 2).
  bool structured_start = true;
};

struct EnergyResult {
  Configuration config;
  double energy = 0.0;
  int restarts = 0;
  // Norm of the tangential (sphere, circle) or KKT-projected (ball, segment)
  // gradient at the returned configuration.
  double gradient_norm = 0.0;
};

/// Best-found minimal-energy configuration by multistart projected gradient
/// descent with Barzilai-Borwein steps and Armijo backtracking.
EnergyResult minimize_energy(const Domain& domain, std::size_t n, double p, const EnergyOptions& opts = {});

/// n (n^2 - 1) / 12, the energy of the n-th roots of unity at p = 2.
double roots_of_unity_energy_p2(std::size_t n);

struct EnergyBound {
  double value = 0.0;   // energy / (n - 1)
  double energy = 0.0;  // the energy it was computed from
  // True only when the energy is the known minimum (circle, p = 2), which
  // makes the value a proven lower bound on the max-min polarization.
  bool certified = false;
};

EnergyBound polarization_lower_bound_from_energy(const Domain& domain, std::size_t n, double p,
                                                 const EnergyOptions& opts = {});

/// Residuals (n - 1) E(n + 1) - (n + 1) E(n) for consecutive energies
/// E(n0), E(n0 + 1), ...
std::vector<double> superadditivity_check(std::span<const double> energies, std::size_t n0);

}  // namespace rpl
