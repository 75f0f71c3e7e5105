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

#include "rpl/simplex_qp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace rpl {

namespace {

// Minimizer of the objective on the affine hull of the free set.
Eigen::VectorXd solve_on_face(const Eigen::MatrixXd& Q, const Eigen::VectorXd& c, const std::vector<int>& free,
                              double ridge) {
  const int m = static_cast<int>(free.size());
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
  Eigen::VectorXd rhs(m + 1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) kkt(a, b) = Q(free[a], free[b]);
    kkt(a, a) += ridge;
    kkt(a, m) = 1.0;
    kkt(m, a) = 1.0;
    rhs(a) = -c(free[a]);
  }
  rhs(m) = 1.0;
  return kkt.fullPivLu().solve(rhs).head(m);
}

}  // namespace

std::vector<double> solve_simplex_qp(const std::vector<double>& Qv, const std::vector<double>& cv) {
  const int k = static_cast<int>(cv.size());
  if (k == 0) throw std::invalid_argument("solve_simplex_qp: empty problem");
  if (Qv.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k)) {
    throw std::invalid_argument("solve_simplex_qp: Q has the wrong size");
  }
  const Eigen::MatrixXd Q = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      Qv.data(), k, k);
  const Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(cv.data(), k);
  const double ridge = 1e-12 * std::max(Q.trace(), 1e-300);
  const double scale = std::max(c.cwiseAbs().maxCoeff(), Q.cwiseAbs().maxCoeff());
  const double eps = 1e-13 * std::max(scale, 1e-300);

  // Start at the best vertex.
  int start = 0;
  for (int i = 1; i < k; ++i) {
    if (c(i) + 0.5 * Q(i, i) < c(start) + 0.5 * Q(start, start)) start = i;
  }
  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(k);
  lambda(start) = 1.0;
  std::vector<int> free = {start};

  for (int iter = 0; iter < 10 * k + 50; ++iter) {
    const Eigen::VectorXd target = solve_on_face(Q, c, free, ridge);
    // Move toward the face minimizer, stopping at the first blocking bound.
    double step = 1.0;
    int blocking = -1;
    for (std::size_t a = 0; a < free.size(); ++a) {
      const double cur = lambda(free[a]);
      const double dir = target(static_cast<int>(a)) - cur;
      if (dir < 0.0 && target(static_cast<int>(a)) < 0.0) {
        const double t = cur / -dir;
        if (t < step) {
          step = t;
          blocking = static_cast<int>(a);
        }
      }
    }
    for (std::size_t a = 0; a < free.size(); ++a) {
      lambda(free[a]) += step * (target(static_cast<int>(a)) - lambda(free[a]));
    }
    if (blocking >= 0) {
      lambda(free[blocking]) = 0.0;
      free.erase(free.begin() + blocking);
      continue;
    }
    // Face optimum reached; check the multipliers of the bound constraints.
    const Eigen::VectorXd grad = Q * lambda + c;
    double theta = 0.0;
    for (int i : free) theta += grad(i);
    theta /= static_cast<double>(free.size());
    int enter = -1;
    double worst = -eps;
    for (int i = 0; i < k; ++i) {
      if (std::find(free.begin(), free.end(), i) != free.end()) continue;
      const double w = grad(i) - theta;
      if (w < worst) {
        worst = w;
        enter = i;
      }
    }
    if (enter < 0) break;
    free.push_back(enter);
  }
  std::vector<double> out(lambda.data(), lambda.data() + k);
  double sum = 0.0;
  for (double& v : out) {
    v = std::max(v, 0.0);
    sum += v;
  }
  for (double& v : out) v /= sum;
  return out;
}

}  // namespace rpl
