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

#include "rpl/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rpl/error.hpp"
#include "rpl/kernels.hpp"

namespace rpl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// t - t_j reduced to [-pi, pi].
double offset(double t, double tj) { return std::remainder(t - tj, kTwoPi); }

void check_proximity(std::span<const double> angles, double t, const char* who) {
  for (double tj : angles) {
    if (std::abs(offset(t, tj)) < kProximityTol) {
      throw ProximityError(std::string(who) + ": evaluation point within 1e-3 of a node");
    }
  }
}

}  // namespace

double riesz_potential(const Configuration& config, double p, std::span<const double> x) {
  if (!(p > 0.0)) throw InvalidArgument("riesz_potential: p must be positive");
  if (!config.domain().contains(x, 1e-9)) throw InvalidArgument("riesz_potential: x is not in the domain");
  const kernels::RieszKernel k(p);
  double sum = 0.0;
  for (std::size_t j = 0; j < config.size(); ++j) {
    const double r2 = squared_distance(x, config[j]);
    if (r2 == 0.0) return kInf;
    sum += k.from_sq(r2);
  }
  return sum;
}

double riesz_potential_gradient(const PointSet& nodes, double p, std::span<const double> x, std::span<double> grad) {
  const kernels::RieszKernel k(p);
  std::fill(grad.begin(), grad.end(), 0.0);
  double sum = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const auto y = nodes[j];
    const double r2 = squared_distance(x, y);
    if (r2 == 0.0) {
      std::fill(grad.begin(), grad.end(), std::numeric_limits<double>::quiet_NaN());
      return kInf;
    }
    const double v = k.from_sq(r2);
    sum += v;
    const double c = -p * v / r2;
    for (std::size_t a = 0; a < x.size(); ++a) grad[a] += c * (x[a] - y[a]);
  }
  return sum;
}

double circle_A(std::span<const double> angles, double p, double t) {
  if (!(p > 0.0)) throw InvalidArgument("circle_A: p must be positive");
  const kernels::RieszKernel k(p);
  double sum = 0.0;
  for (double tj : angles) {
    const double u = 2.0 * std::sin(0.5 * offset(t, tj));
    if (u == 0.0) return kInf;
    sum += k.from_sq(u * u);
  }
  return sum;
}

double circle_A_d1(std::span<const double> angles, double p, double t) {
  const kernels::RieszKernel k(p);
  double sum = 0.0;
  for (double tj : angles) {
    const double s = 0.5 * offset(t, tj);
    const double u = 2.0 * std::sin(s);
    if (u == 0.0) return std::numeric_limits<double>::quiet_NaN();
    sum += -0.5 * p * (std::cos(s) / std::sin(s)) * k.from_sq(u * u);
  }
  return sum;
}

double circle_A_d2(std::span<const double> angles, double p, double t) {
  const kernels::RieszKernel k(p);
  double sum = 0.0;
  for (double tj : angles) {
    const double u = 2.0 * std::sin(0.5 * offset(t, tj));
    if (u == 0.0) return kInf;
    const double u2 = u * u;
    sum += (p * (p + 1.0) / u2 - 0.25 * p * p) * k.from_sq(u2);
  }
  return sum;
}

double circle_A_recurrence_check(std::span<const double> angles, double p, double t) {
  if (!(p > 0.0)) throw InvalidArgument("circle_A_recurrence_check: p must be positive");
  check_proximity(angles, t, "circle_A_recurrence_check");
  const double lhs = circle_A(angles, p + 2.0, t);
  const double rhs = (circle_A_d2(angles, p, t) + 0.25 * p * p * circle_A(angles, p, t)) / (p * p + p);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

std::vector<double> csc2_derivative_poly(int k) {
  if (k < 0) throw InvalidArgument("csc2_derivative_poly: order must be nonnegative");
  // d/ds cot(s/2) = -(1 + c^2)/2, so P_{k+1}(c) = -(1/2)(1 + c^2) P_k'(c).
  std::vector<double> poly = {1.0, 0.0, 1.0};
  for (int step = 0; step < k; ++step) {
    std::vector<double> deriv(poly.size() - 1, 0.0);
    for (std::size_t i = 1; i < poly.size(); ++i) deriv[i - 1] = static_cast<double>(i) * poly[i];
    std::vector<double> next(deriv.size() + 2, 0.0);
    for (std::size_t i = 0; i < deriv.size(); ++i) {
      next[i] += -0.5 * deriv[i];
      next[i + 2] += -0.5 * deriv[i];
    }
    poly = std::move(next);
  }
  return poly;
}

double log_derivative_functional(std::span<const double> angles, int m, double t) {
  if (m < 2 || m % 2 != 0) throw InvalidArgument("log_derivative_functional: m must be an even integer >= 2");
  if (m > 40) throw InvalidArgument("log_derivative_functional: m above 40 is not supported");
  check_proximity(angles, t, "log_derivative_functional");
  const std::vector<double> poly = csc2_derivative_poly(m - 2);
  double sum = 0.0;
  for (double tj : angles) {
    const double s = 0.5 * offset(t, tj);
    const double c = std::cos(s) / std::sin(s);
    double v = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * c + *it;
    sum += 0.25 * v;
  }
  return sum;
}

double log_abs_Q(std::span<const double> angles, double t) {
  double sum = 0.0;
  for (double tj : angles) sum += std::log(std::abs(std::sin(0.5 * offset(t, tj))));
  return sum;
}

double log_abs_Q_d1(std::span<const double> angles, double t) {
  double sum = 0.0;
  for (double tj : angles) {
    const double s = 0.5 * offset(t, tj);
    sum += 0.5 * std::cos(s) / std::sin(s);
  }
  return sum;
}

double log_abs_Q_d2(std::span<const double> angles, double t) {
  double sum = 0.0;
  for (double tj : angles) {
    const double sn = std::sin(0.5 * offset(t, tj));
    sum -= 0.25 / (sn * sn);
  }
  return sum;
}

std::vector<double> distinct_sorted_angles(std::span<const double> angles) {
  std::vector<double> out;
  out.reserve(angles.size());
  for (double t : angles) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double product_max_point(std::span<const double> angles) {
  if (angles.empty()) throw InvalidArgument("product_max_point: needs at least one angle");
  const std::vector<double> nodes = distinct_sorted_angles(angles);
  const std::size_t g = nodes.size();
  // log |Q| is strictly concave between consecutive nodes, so each gap holds
  // exactly one critical point; every gap is examined.
  double best_t = 0.0;
  double best_v = -kInf;
  auto d1 = [&](double t) { return log_abs_Q_d1(angles, t); };
  auto d2 = [&](double t) { return log_abs_Q_d2(angles, t); };
  for (std::size_t i = 0; i < g; ++i) {
    const double lo = nodes[i];
    const double hi = (i + 1 < g) ? nodes[i + 1] : nodes[0] + kTwoPi;
    double t = monotone_root(d1, d2, lo, hi, true);
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    const double v = log_abs_Q(angles, t);
    const double slack = 1e-12 * std::max(1.0, std::abs(v));
    if (v > best_v + slack) {
      best_v = v;
      best_t = t;
    } else if (std::abs(v - best_v) <= slack && t < best_t) {
      best_v = std::max(best_v, v);
      best_t = t;
    }
  }
  return best_t;
}

}  // namespace rpl
