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

#include "rpl/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <omp.h>

namespace rpl::kernels {

namespace {

// Compensated (Neumaier) accumulator.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

std::size_t block_count(std::size_t n) { return (n + kBlock - 1) / kBlock; }

double half_sin_term(std::size_t k, std::size_t n, const RieszKernel& ker) {
  const double s = 2.0 * std::sin((2.0 * static_cast<double>(k) + 1.0) * std::numbers::pi / (2.0 * static_cast<double>(n)));
  return ker.from_sq(s * s);
}

void softmin_block(const PointSet& nodes, const PointSet& mesh, const RieszKernel& ker, double beta, double umin,
                   std::span<const double> pot, std::size_t begin, std::size_t end, double& wsum,
                   std::span<double> grad) {
  const int dim = nodes.dim();
  const std::size_t n = nodes.size();
  const double p = ker.p();
  for (std::size_t m = begin; m < end; ++m) {
    if (!std::isfinite(pot[m])) continue;
    const double w = std::exp(-beta * (pot[m] - umin));
    if (w == 0.0) continue;
    wsum += w;
    const auto y = mesh[m];
    for (std::size_t j = 0; j < n; ++j) {
      const auto x = nodes[j];
      const double r2 = squared_distance(y, x);
      const double c = w * p * ker.from_sq(r2) / r2;
      for (int k = 0; k < dim; ++k) grad[j * dim + k] += c * (y[k] - x[k]);
    }
  }
}

double energy_row(const PointSet& pts, const RieszKernel& ker, std::size_t i, double& min_r2, double* grad_row) {
  const int dim = pts.dim();
  const double p = ker.p();
  double s = 0.0;
  const auto xi = pts[i];
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k == i) continue;
    const auto xk = pts[k];
    const double r2 = squared_distance(xi, xk);
    min_r2 = std::min(min_r2, r2);
    const double v = ker.from_sq(r2);
    s += v;
    if (grad_row != nullptr) {
      const double c = -2.0 * p * v / r2;
      for (int c_idx = 0; c_idx < dim; ++c_idx) grad_row[c_idx] += c * (xi[c_idx] - xk[c_idx]);
    }
  }
  return s;
}

double hex_row(double p, double radius, long b) {
  const double r2max = radius * radius;
  const double bb = static_cast<double>(b);
  const double rem = r2max - 0.75 * bb * bb;
  if (rem < 0.0) return 0.0;
  const double s = std::sqrt(rem);
  const long a_lo = static_cast<long>(std::floor(-0.5 * bb - s)) - 1;
  const long a_hi = static_cast<long>(std::ceil(-0.5 * bb + s)) + 1;
  const RieszKernel ker(p);
  Accumulator acc;
  for (long a = a_lo; a <= a_hi; ++a) {
    if (a == 0 && b == 0) continue;
    const double aa = static_cast<double>(a);
    const double q = aa * aa + aa * bb + bb * bb;
    if (q > r2max) continue;
    acc.add(ker.from_sq(q));
  }
  return acc.value();
}

long hex_row_limit(double radius) { return static_cast<long>(std::floor(2.0 * radius / std::sqrt(3.0))) + 1; }

}  // namespace

RieszKernel::RieszKernel(double p) : p_(p), half_p_(0.5 * p), mode_(0) {
  if (p == 1.0) mode_ = 1;
  else if (p == 2.0) mode_ = 2;
  else if (p == 3.0) mode_ = 3;
  else if (p == 4.0) mode_ = 4;
}

void potential_at(const PointSet& nodes, const PointSet& targets, double p, std::span<double> out) {
  const RieszKernel ker(p);
  const auto m_count = static_cast<std::ptrdiff_t>(targets.size());
  const std::size_t n = nodes.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t m = 0; m < m_count; ++m) {
    const auto y = targets[static_cast<std::size_t>(m)];
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += ker.from_sq(squared_distance(y, nodes[j]));
    out[static_cast<std::size_t>(m)] = s;
  }
}

SoftminEval softmin_gradient(const PointSet& nodes, const PointSet& mesh, double p, double beta,
                             std::span<double> grad) {
  const RieszKernel ker(p);
  std::vector<double> pot(mesh.size());
  potential_at(nodes, mesh, p, pot);
  const double umin = *std::min_element(pot.begin(), pot.end());

  const std::size_t width = nodes.size() * static_cast<std::size_t>(nodes.dim());
  const std::size_t blocks = block_count(mesh.size());
  std::vector<double> partial(blocks * width, 0.0);
  std::vector<double> wpartial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const auto ub = static_cast<std::size_t>(b);
    const std::size_t begin = ub * kBlock;
    const std::size_t end = std::min(mesh.size(), begin + kBlock);
    softmin_block(nodes, mesh, ker, beta, umin, pot, begin, end, wpartial[ub],
                  std::span<double>(partial.data() + ub * width, width));
  }
  double wsum = 0.0;
  std::fill(grad.begin(), grad.end(), 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    wsum += wpartial[b];
    for (std::size_t i = 0; i < width; ++i) grad[i] += partial[b * width + i];
  }
  for (auto& g : grad) g /= wsum;
  return {umin - std::log(wsum) / beta, umin};
}

EnergyEval energy(const PointSet& pts, double p) {
  const RieszKernel ker(p);
  const std::size_t n = pts.size();
  std::vector<double> rows(n), mins(n, std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    rows[ui] = energy_row(pts, ker, ui, mins[ui], nullptr);
  }
  EnergyEval e{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    e.energy += rows[i];
    e.min_sq_distance = std::min(e.min_sq_distance, mins[i]);
  }
  return e;
}

EnergyEval energy_gradient(const PointSet& pts, double p, std::span<double> grad) {
  const RieszKernel ker(p);
  const std::size_t n = pts.size();
  const auto dim = static_cast<std::size_t>(pts.dim());
  std::fill(grad.begin(), grad.end(), 0.0);
  std::vector<double> rows(n), mins(n, std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    rows[ui] = energy_row(pts, ker, ui, mins[ui], grad.data() + ui * dim);
  }
  EnergyEval e{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    e.energy += rows[i];
    e.min_sq_distance = std::min(e.min_sq_distance, mins[i]);
  }
  return e;
}

double equally_spaced_sum(std::size_t n, double p) {
  const RieszKernel ker(p);
  const std::size_t half = n / 2;
  const std::size_t blocks = block_count(half);
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const auto ub = static_cast<std::size_t>(b);
    Accumulator acc;
    const std::size_t end = std::min(half, (ub + 1) * kBlock);
    for (std::size_t k = ub * kBlock; k < end; ++k) acc.add(half_sin_term(k, n, ker));
    partial[ub] = acc.value();
  }
  Accumulator total;
  for (double v : partial) total.add(2.0 * v);
  // Odd n: the middle term sits at the antipode, distance 2.
  if (n % 2 == 1) total.add(ker.from_sq(4.0));
  return total.value();
}

double hex_lattice_sum(double p, double radius) {
  const long lim = hex_row_limit(radius);
  const std::size_t rows = static_cast<std::size_t>(2 * lim + 1);
  std::vector<double> partial(rows, 0.0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(rows); ++r) {
    partial[static_cast<std::size_t>(r)] = hex_row(p, radius, static_cast<long>(r) - lim);
  }
  Accumulator total;
  for (double v : partial) total.add(v);
  return total.value();
}

void nearest_update(const PointSet& cand, std::span<const double> x, std::span<double> dmin) {
  const auto n = static_cast<std::ptrdiff_t>(cand.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    dmin[ui] = std::min(dmin[ui], std::sqrt(squared_distance(cand[ui], x)));
  }
}

namespace serial {

void potential_at(const PointSet& nodes, const PointSet& targets, double p, std::span<double> out) {
  for (std::size_t m = 0; m < targets.size(); ++m) {
    double s = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const double r = std::sqrt(squared_distance(targets[m], nodes[j]));
      s += std::pow(r, -p);
    }
    out[m] = s;
  }
}

SoftminEval softmin_gradient(const PointSet& nodes, const PointSet& mesh, double p, double beta,
                             std::span<double> grad) {
  std::vector<double> pot(mesh.size());
  potential_at(nodes, mesh, p, pot);
  const double umin = *std::min_element(pot.begin(), pot.end());
  std::fill(grad.begin(), grad.end(), 0.0);
  double wsum = 0.0;
  const int dim = nodes.dim();
  for (std::size_t m = 0; m < mesh.size(); ++m) {
    if (!std::isfinite(pot[m])) continue;
    const double w = std::exp(-beta * (pot[m] - umin));
    wsum += w;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const double r = std::sqrt(squared_distance(mesh[m], nodes[j]));
      const double c = w * p * std::pow(r, -p - 2.0);
      for (int k = 0; k < dim; ++k) grad[j * dim + k] += c * (mesh[m][k] - nodes[j][k]);
    }
  }
  for (auto& g : grad) g /= wsum;
  return {umin - std::log(wsum) / beta, umin};
}

EnergyEval energy(const PointSet& pts, double p) {
  EnergyEval e{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (j == k) continue;
      const double r2 = squared_distance(pts[j], pts[k]);
      e.min_sq_distance = std::min(e.min_sq_distance, r2);
      e.energy += std::pow(std::sqrt(r2), -p);
    }
  }
  return e;
}

EnergyEval energy_gradient(const PointSet& pts, double p, std::span<double> grad) {
  std::fill(grad.begin(), grad.end(), 0.0);
  const int dim = pts.dim();
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (j == k) continue;
      const double r = std::sqrt(squared_distance(pts[j], pts[k]));
      const double c = -2.0 * p * std::pow(r, -p - 2.0);
      for (int i = 0; i < dim; ++i) grad[j * dim + i] += c * (pts[j][i] - pts[k][i]);
    }
  }
  return energy(pts, p);
}

double equally_spaced_sum(std::size_t n, double p) {
  Accumulator acc;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = 2.0 * std::sin((2.0 * static_cast<double>(k) + 1.0) * std::numbers::pi / (2.0 * static_cast<double>(n)));
    acc.add(std::pow(s, -p));
  }
  return acc.value();
}

double hex_lattice_sum(double p, double radius) {
  const long lim = hex_row_limit(radius);
  double total = 0.0;
  for (long b = -lim; b <= lim; ++b) {
    for (long a = -2 * lim; a <= 2 * lim; ++a) {
      if (a == 0 && b == 0) continue;
      const double x = static_cast<double>(a) + 0.5 * static_cast<double>(b);
      const double y = 0.5 * std::sqrt(3.0) * static_cast<double>(b);
      const double q = static_cast<double>(a * a + a * b + b * b);
      if (q > radius * radius) continue;
      total += std::pow(std::hypot(x, y), -p);
    }
  }
  return total;
}

void nearest_update(const PointSet& cand, std::span<const double> x, std::span<double> dmin) {
  for (std::size_t i = 0; i < cand.size(); ++i) {
    dmin[i] = std::min(dmin[i], std::sqrt(squared_distance(cand[i], x)));
  }
}

}  // namespace serial

}  // namespace rpl::kernels
