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

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

#include "rpl/point_set.hpp"

// Data-parallel inner loops. Every OpenMP reduction runs over a fixed block
// partition and combines block partials in index order, so results do not
// depend on the thread count. The serial namespace holds the straightforward
// reference loops used by the tests and benchmarks.
namespace rpl::kernels {

inline constexpr std::size_t kBlock = 1024;

/// r^{-p} from r^2, with fast paths for p in {1, 2, 3, 4}. Returns +inf at 0.
class RieszKernel {
 public:
  explicit RieszKernel(double p);
  double p() const { return p_; }
  double from_sq(double r2) const {
    if (r2 == 0.0) return std::numeric_limits<double>::infinity();
    switch (mode_) {
      case 1: return 1.0 / std::sqrt(r2);
      case 2: return 1.0 / r2;
      case 3: return 1.0 / (r2 * std::sqrt(r2));
      case 4: return 1.0 / (r2 * r2);
      default: return std::exp(-half_p_ * std::log(r2));
    }
  }

 private:
  double p_;
  double half_p_;
  int mode_;
};

struct SoftminEval {
  double value = 0.0;          // -(1/beta) log sum exp(-beta U)
  double min_potential = 0.0;  // min_m U(y_m)
};

struct EnergyEval {
  double energy = 0.0;           // ordered-pair sum
  double min_sq_distance = 0.0;  // smallest |x_j - x_k|^2, j != k
};

/// out[m] = sum_j |targets[m] - nodes[j]|^{-p}.
void potential_at(const PointSet& nodes, const PointSet& targets, double p, std::span<double> out);

/// Softmin over mesh points of the node potential and its gradient with
/// respect to the node coordinates (grad has nodes.size() * dim entries).
SoftminEval softmin_gradient(const PointSet& nodes, const PointSet& mesh, double p, double beta,
                             std::span<double> grad);

EnergyEval energy(const PointSet& pts, double p);
/// Fills grad (size * dim) with dE/dx_j and returns the energy.
EnergyEval energy_gradient(const PointSet& pts, double p, std::span<double> grad);

/// sum_{k=0}^{n-1} [2 sin((2k+1) pi / (2n))]^{-p}.
double equally_spaced_sum(std::size_t n, double p);

/// sum over nonzero hexagonal-lattice vectors with |X| <= radius of |X|^{-p}.
double hex_lattice_sum(double p, double radius);

/// dmin[i] = min(dmin[i], |cand[i] - x|).
void nearest_update(const PointSet& cand, std::span<const double> x, std::span<double> dmin);

namespace serial {
void potential_at(const PointSet& nodes, const PointSet& targets, double p, std::span<double> out);
SoftminEval softmin_gradient(const PointSet& nodes, const PointSet& mesh, double p, double beta,
                             std::span<double> grad);
EnergyEval energy(const PointSet& pts, double p);
EnergyEval energy_gradient(const PointSet& pts, double p, std::span<double> grad);
double equally_spaced_sum(std::size_t n, double p);
double hex_lattice_sum(double p, double radius);
void nearest_update(const PointSet& cand, std::span<const double> x, std::span<double> dmin);
}  // namespace serial

}  // namespace rpl::kernels
