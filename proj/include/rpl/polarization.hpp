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

struct PolarizationResult {
  double value = 0.0;
  std::vector<double> argmin;
  // Cells and mesh points whose potential was evaluated.
  std::size_t mesh_size = 0;
  // Subdivision levels of the certificate.
  int refinement_steps = 0;
  // Certified absolute gap: the true minimum is at least value - tolerance.
  double tolerance = 0.0;
};

struct InnerMinOptions {
  // Total cells visited; bounds peak memory at roughly 150 bytes per cell.
  std::size_t max_cells = 10'000'000;
  int max_levels = 48;
};

/// Certified global minimum of the potential over the domain. `tol` is an
/// absolute gap. Throws NonconvergenceError when the cell budget runs out.
PolarizationResult inner_min(const Configuration& config, double p, double tol, const InnerMinOptions& opts = {});

struct LocalMin {
  std::vector<double> x;
  double value = 0.0;
};

/// Local minimizers of the potential, sorted by value. Exact (one per gap)
/// on the circle and segment; mesh seeds plus projected descent elsewhere.
std::vector<LocalMin> local_minima(const Configuration& config, double p);

/// sum_{k=0}^{n-1} [2 sin((2k+1) pi / (2n))]^{-p}: the polarization of the
/// n-th roots of unity, attained midway between neighbors.
double equally_spaced_value(std::size_t n, double p);

struct MaxMinOptions {
  int restarts = 16;
  std::uint64_t seed = 1;
  int stages = 8;
  int iterations_per_stage = 30;
  int polish_iterations = 300;
  // Softmin mesh size per point; 0 picks a domain default.
  std::size_t mesh_per_point = 0;
  // Restart 0 starts from a symmetric configuration when set.
  bool structured_start = true;
  bool certify = true;
  // Relative certificate gap; 0 picks 1e-9 (circle, segment), 1e-6 (sphere)
  // or 1e-4 (ball).
  double certify_tol = 0.0;
  // Relative agreement required between two restarts for `converged`.
  double agree_tol = 1e-6;
};

struct MaxMinResult {
  Configuration config;
  double value = 0.0;
  int restarts = 0;
  bool converged = false;
  // Value of every restart, in restart order.
  std::vector<double> restart_values;
  // Certificate of the final inner minimum (zero fields when not certified).
  PolarizationResult certificate;
};

/// Best-found n-point configuration for the max-min polarization problem.
MaxMinResult maximize_polarization(const Domain& domain, std::size_t n, double p, const MaxMinOptions& opts = {});

/// Minimum of A_p over the 2n test angles pi k / n; +inf if one hits a node.
double discrete_polarization(std::span<const double> angles, std::size_t n, double p);
/// The optimum of the discrete problem, sum_k g(pi/(2n) - 2 pi k / n).
double discrete_optimum(std::size_t n, double p);
/// Angles pi/(2n) + 2 pi j / n attaining the discrete optimum.
std::vector<double> discrete_optimal_angles(std::size_t n);

/// A_p at the maximizer of |Q|.
double polarization_at_product_max(std::span<const double> angles, double p);

}  // namespace rpl
