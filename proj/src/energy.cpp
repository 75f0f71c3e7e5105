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

#include "rpl/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rpl/error.hpp"
#include "rpl/kernels.hpp"

namespace rpl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Projects each node's gradient block: tangent space on spheres, and on
// ball or segment boundaries drops the outward part of a descent direction.
void project_gradient(const Domain& dom, const PointSet& pts, std::vector<double>& grad) {
  const std::size_t D = static_cast<std::size_t>(dom.ambient_dim());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const auto x = pts[j];
    std::span<double> g(grad.data() + j * D, D);
    if (dom.is_sphere_like()) {
      const double s = dot(g, x);
      for (std::size_t a = 0; a < D; ++a) g[a] -= s * x[a];
      continue;
    }
    double nrm[kMaxAmbientDim] = {};
    bool on_boundary = false;
    if (dom.kind() == DomainKind::segment) {
      if (x[0] <= 0.0) {
        nrm[0] = -1.0;
        on_boundary = true;
      } else if (x[0] >= 1.0) {
        nrm[0] = 1.0;
        on_boundary = true;
      }
    } else {
      const double r = std::sqrt(dot(x, x));
      if (r >= 1.0 - 1e-15) {
        for (std::size_t a = 0; a < D; ++a) nrm[a] = x[a] / r;
        on_boundary = true;
      }
    }
    if (!on_boundary) continue;
    double s = 0.0;
    for (std::size_t a = 0; a < D; ++a) s += g[a] * nrm[a];
    // Descent moves along -g; it leaves the domain when g . n < 0.
    if (s < 0.0) {
      for (std::size_t a = 0; a < D; ++a) g[a] -= s * nrm[a];
    }
  }
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

struct Descent {
  PointSet pts;
  double energy = kInf;
  double gradient_norm = kInf;
};

Descent descend(const Domain& dom, PointSet pts, double p, const EnergyOptions& opts) {
  const std::size_t N = pts.coords().size();
  std::vector<double> g(N), gn(N);
  auto eval = kernels::energy_gradient(pts, p, g);
  project_gradient(dom, pts, g);
  double f = eval.energy;
  double alpha = -1.0;
  PointSet trial = pts;
  for (int it = 0; it < opts.max_iterations; ++it) {
    const double gnorm = norm(g);
    if (!(gnorm > opts.gradient_tol * f)) break;
    if (alpha < 0.0) alpha = 1e-2 / gnorm;
    double fn = kInf;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t a = 0; a < N; ++a) trial.coords()[a] = pts.coords()[a] - alpha * g[a];
      for (std::size_t j = 0; j < pts.size(); ++j) dom.project(trial.mutable_point(j));
      double decrease = 0.0;
      for (std::size_t a = 0; a < N; ++a) decrease += g[a] * (trial.coords()[a] - pts.coords()[a]);
      const auto te = kernels::energy_gradient(trial, p, gn);
      fn = te.energy;
      if (std::isfinite(fn) && te.min_sq_distance > 0.0 && fn <= f + 1e-4 * decrease) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;
    project_gradient(dom, trial, gn);
    double sy = 0.0, ss = 0.0;
    for (std::size_t a = 0; a < N; ++a) {
      const double s = trial.coords()[a] - pts.coords()[a];
      sy += s * (gn[a] - g[a]);
      ss += s * s;
    }
    std::swap(pts, trial);
    std::swap(g, gn);
    const double prev = f;
    f = fn;
    if (ss <= 1e-30 || prev - f <= 0.0) break;
    alpha = (sy > 0.0) ? ss / sy : 2.0 * alpha;
  }
  return {std::move(pts), f, norm(g)};
}

PointSet structured_start(const Domain& dom, std::size_t n, std::uint64_t seed) {
  PointSet pts(dom.ambient_dim());
  switch (dom.kind()) {
    case DomainKind::circle:
      for (double t : equally_spaced_angles(n, 0.0)) {
        const double x[2] = {std::cos(t), std::sin(t)};
        pts.push_back(x);
      }
      return pts;
    case DomainKind::segment:
      for (std::size_t j = 0; j < n; ++j) {
        const double x = static_cast<double>(j) / static_cast<double>(n - 1);
        pts.push_back(std::span<const double>(&x, 1));
      }
      return pts;
    case DomainKind::sphere:
      if (dom.dim() == 2) return fibonacci_sphere(n);
      break;
    case DomainKind::ball: break;
  }
  return sample_uniform(dom, n, seed).points();
}

}  // namespace

double energy(const Configuration& config, double p) {
  if (!(p > 0.0)) throw InvalidArgument("energy: p must be positive");
  const auto e = kernels::energy(config.points(), p);
  if (config.size() > 1 && e.min_sq_distance < kCoincidenceDistance * kCoincidenceDistance) {
    throw CoincidentPointsError("energy: two points are closer than 1e-9");
  }
  return e.energy;
}

EnergyResult minimize_energy(const Domain& domain, std::size_t n, double p, const EnergyOptions& opts) {
  if (n < 2) throw InvalidArgument("minimize_energy: n must be at least 2");
  if (!(p > 0.0)) throw InvalidArgument("minimize_energy: p must be positive");
  if (opts.restarts < 1) throw InvalidArgument("minimize_energy: restarts must be positive");
  const int R = opts.restarts;
  std::vector<Descent> runs(static_cast<std::size_t>(R));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < R; ++r) {
    const std::uint64_t seed = opts.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(r);
    PointSet start = (r == 0 && opts.structured_start) ? structured_start(domain, n, seed)
                                                       : sample_uniform(domain, n, seed).points();
    runs[static_cast<std::size_t>(r)] = descend(domain, std::move(start), p, opts);
  }
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].energy < runs[best].energy) best = r;
  }
  Configuration config = Configuration::projected(domain, std::move(runs[best].pts));
  const double e = energy(config, p);
  return {std::move(config), e, R, runs[best].gradient_norm};
}

double roots_of_unity_energy_p2(std::size_t n) {
  const double nd = static_cast<double>(n);
  return nd * (nd * nd - 1.0) / 12.0;
}

EnergyBound polarization_lower_bound_from_energy(const Domain& domain, std::size_t n, double p,
                                                 const EnergyOptions& opts) {
  if (n < 2) throw InvalidArgument("polarization_lower_bound_from_energy: n must be at least 2");
  EnergyBound out;
  if (domain.kind() == DomainKind::circle && p == 2.0) {
    out.energy = roots_of_unity_energy_p2(n);
    out.certified = true;
  } else {
    out.energy = minimize_energy(domain, n, p, opts).energy;
  }
  out.value = out.energy / static_cast<double>(n - 1);
  return out;
}

std::vector<double> superadditivity_check(std::span<const double> energies, std::size_t n0) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < energies.size(); ++i) {
    const double n = static_cast<double>(n0 + i);
    out.push_back((n - 1.0) * energies[i + 1] - (n + 1.0) * energies[i]);
  }
  return out;
}

}  // namespace rpl
