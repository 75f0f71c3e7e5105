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

#include <span>
#include <vector>

#include "rpl/domain.hpp"

namespace rpl {

// Derivative-based circle functionals refuse evaluation points closer than
// this (in angle) to a node.
inline constexpr double kProximityTol = 1e-3;

/// Sum of |x - x_j|^{-p}; +inf when x coincides with a node.
double riesz_potential(const Configuration& config, double p, std::span<const double> x);

/// Potential of bare nodes at x, with its ambient gradient written to grad.
double riesz_potential_gradient(const PointSet& nodes, double p, std::span<const double> x, std::span<double> grad);

/// A_p(t) = sum_j (2 |sin((t - t_j) / 2)|)^{-p}.
double circle_A(std::span<const double> angles, double p, double t);
/// dA_p/dt, termwise.
double circle_A_d1(std::span<const double> angles, double p, double t);
/// d^2 A_p/dt^2, termwise: (p(p+1) u^{-2} - p^2/4) u^{-p} with u = 2 |sin(s/2)|.
double circle_A_d2(std::span<const double> angles, double p, double t);

/// Relative residual |A_{p+2} - (A_p'' + (p^2/4) A_p)/(p^2 + p)| / A_{p+2}.
/// Throws ProximityError within kProximityTol of a node.
double circle_A_recurrence_check(std::span<const double> angles, double p, double t);

/// Coefficients (ascending) of the polynomial P_k with
/// d^k/ds^k csc^2(s/2) = P_k(cot(s/2)).
std::vector<double> csc2_derivative_poly(int k);

/// -(log |Q|)^{(m)}(t) = sum_j g_m(t - t_j) with g_m = (1/4) d^{m-2}/ds^{m-2} csc^2(s/2).
/// Equals A_2 for m = 2 and 6 A_4 - A_2 for m = 4.
double log_derivative_functional(std::span<const double> angles, int m, double t);

/// log |Q(t)| = sum_j log |sin((t - t_j)/2)|.
double log_abs_Q(std::span<const double> angles, double t);
/// First and second t-derivatives of log |Q|.
double log_abs_Q_d1(std::span<const double> angles, double t);
double log_abs_Q_d2(std::span<const double> angles, double t);

/// Global maximizer of |Q| on [0, 2 pi); ties resolve to the smallest angle.
double product_max_point(std::span<const double> angles);

/// Angles reduced to [0, 2 pi), sorted, duplicates removed.
std::vector<double> distinct_sorted_angles(std::span<const double> angles);

/// Unique minimizer or maximizer of a function whose derivative `dfun` is
/// strictly monotone on the open interval (lo, hi) and changes sign there.
/// `decreasing` tells the direction of the derivative's monotonicity.
template <class D1, class D2>
double monotone_root(D1 dfun, D2 d2fun, double lo, double hi, bool decreasing);

}  // namespace rpl

#include "rpl/detail/monotone_root.hpp"
