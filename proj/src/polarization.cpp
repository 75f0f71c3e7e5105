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

#include "rpl/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "rpl/cells.hpp"
#include "rpl/error.hpp"
#include "rpl/kernels.hpp"
#include "rpl/potentials.hpp"
#include "rpl/simplex_qp.hpp"

namespace rpl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Vec = std::vector<double>;

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

// Removes the normal component on sphere-like domains.
void tangent_project(const Domain& dom, std::span<const double> x, std::span<double> v) {
  if (!dom.is_sphere_like()) return;
  const double s = dot(v, x);
  for (std::size_t a = 0; a < v.size(); ++a) v[a] -= s * x[a];
}

// Outward unit normal when x sits on the boundary of a ball or segment.
bool boundary_normal(const Domain& dom, std::span<const double> x, std::span<double> nrm) {
  if (dom.kind() == DomainKind::segment) {
    if (x[0] <= 1e-12) {
      nrm[0] = -1.0;
      return true;
    }
    if (x[0] >= 1.0 - 1e-12) {
      nrm[0] = 1.0;
      return true;
    }
    return false;
  }
  if (dom.kind() == DomainKind::ball) {
    const double r = norm(x);
    if (r < 1.0 - 1e-12) return false;
    for (std::size_t a = 0; a < x.size(); ++a) nrm[a] = x[a] / r;
    return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Local minima of the potential.

using MatD = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxAmbientDim, kMaxAmbientDim>;
using VecD = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxAmbientDim, 1>;

// Potential, gradient and Hessian at x.
double potential_derivs(const PointSet& nodes, const kernels::RieszKernel& k, double p, const VecD& x, VecD& g,
                        MatD& H) {
  const Eigen::Index D = x.size();
  g.setZero(D);
  H.setZero(D, D);
  double f = 0.0;
  VecD e(D);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const auto y = nodes[j];
    for (Eigen::Index a = 0; a < D; ++a) e(a) = x(a) - y[static_cast<std::size_t>(a)];
    const double r2 = e.squaredNorm();
    if (r2 == 0.0) return kInf;
    const double v = k.from_sq(r2);
    f += v;
    const double c = p * v / r2;
    g -= c * e;
    H.noalias() += (c * (p + 2.0) / r2) * e * e.transpose();
    H.diagonal().array() -= c;
  }
  return f;
}

// Damped projected Newton descent. Points on a sphere, and ball points on the
// boundary whose potential decreases outward, take Riemannian Newton steps on
// the unit sphere; interior points take Euclidean steps. Falls back to a
// scaled gradient step wherever the Hessian model is not positive definite.
double descend(const PointSet& nodes, const Domain& dom, double p, Vec& xv) {
  const kernels::RieszKernel k(p);
  const Eigen::Index D = static_cast<Eigen::Index>(xv.size());
  VecD x = Eigen::Map<const VecD>(xv.data(), D);
  VecD g(D), v(D), y(D);
  MatD H(D, D);
  double f = potential_derivs(nodes, k, p, x, g, H);
  for (int it = 0; it < 80 && std::isfinite(f); ++it) {
    const double r = x.norm();
    const bool on_sphere = dom.is_sphere_like() || (dom.kind() == DomainKind::ball && r >= 1.0 - 1e-12 &&
                                                    g.dot(x) < 0.0);
    VecD grad = g;
    MatD hess = H;
    if (on_sphere) {
      const VecD n = x / r;
      const MatD P = MatD::Identity(D, D) - n * n.transpose();
      const double s = g.dot(n);
      grad = P * g;
      hess = P * H * P - s * P;
      hess += n * n.transpose();
    }
    const double gnorm = grad.norm();
    if (gnorm == 0.0) break;
    Eigen::LDLT<MatD> ldlt(hess);
    bool newton = ldlt.info() == Eigen::Success && ldlt.isPositive();
    if (newton) {
      v = -ldlt.solve(grad);
      if (on_sphere) v -= v.dot(x / r) * (x / r);
      newton = v.allFinite() && v.dot(grad) < 0.0;
    }
    // Harmonic potentials have indefinite Hessians everywhere, so the
    // fallback must take long steps (the line search trims them).
    if (!newton) v = -grad * (0.5 / gnorm);
    const double slope = v.dot(grad);
    if (-slope <= 1e-15 * std::abs(f)) break;
    double t = 1.0;
    double fn = kInf;
    // Rounding slack keeps the test meaningful once f stops changing.
    const double slack = 4e-16 * std::abs(f);
    bool accepted = false;
    for (int bt = 0; bt < 40; ++bt) {
      y = x + t * v;
      if (on_sphere) {
        y /= y.norm();
      } else {
        Vec tmp(y.data(), y.data() + D);
        dom.project(tmp);
        y = Eigen::Map<const VecD>(tmp.data(), D);
      }
      VecD gy(D);
      MatD Hy(D, D);
      fn = potential_derivs(nodes, k, p, y, gy, Hy);
      if (fn <= f + 1e-4 * t * slope + slack) {
        g = gy;
        H = Hy;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
    const double step = (y - x).norm();
    const double progress = f - fn;
    x = y;
    f = fn;
    if (step <= 1e-13 || progress <= 1e-15 * std::abs(f)) break;
  }
  for (Eigen::Index a = 0; a < D; ++a) xv[static_cast<std::size_t>(a)] = x(a);
  return f;
}

std::vector<LocalMin> circle_minima(const Configuration& config, double p) {
  const Vec angles = circle_angles(config);
  const Vec nodes = distinct_sorted_angles(angles);
  auto d1 = [&](double t) { return circle_A_d1(angles, p, t); };
  auto d2 = [&](double t) { return circle_A_d2(angles, p, t); };
  std::vector<LocalMin> out;
  out.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double lo = nodes[i];
    const double hi = (i + 1 < nodes.size()) ? nodes[i + 1] : nodes[0] + kTwoPi;
    const double t = monotone_root(d1, d2, lo, hi, false);
    out.push_back({{std::cos(t), std::sin(t)}, circle_A(angles, p, t)});
  }
  return out;
}

std::vector<LocalMin> segment_minima(const Configuration& config, double p) {
  Vec xs(config.size());
  for (std::size_t j = 0; j < config.size(); ++j) xs[j] = config[j][0];
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const kernels::RieszKernel k(p);
  auto U = [&](double x) { return riesz_potential(config, p, std::span<const double>(&x, 1)); };
  auto d1 = [&](double x) {
    double s = 0.0;
    for (std::size_t j = 0; j < config.size(); ++j) {
      const double e = x - config[j][0];
      s += -p * k.from_sq(e * e) / e;
    }
    return s;
  };
  auto d2 = [&](double x) {
    double s = 0.0;
    for (std::size_t j = 0; j < config.size(); ++j) {
      const double e = x - config[j][0];
      s += p * (p + 1.0) * k.from_sq(e * e) / (e * e);
    }
    return s;
  };
  std::vector<LocalMin> out;
  // U is monotone between an endpoint and the nearest node.
  if (xs.front() > 0.0) out.push_back({{0.0}, U(0.0)});
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double x = monotone_root(d1, d2, xs[i], xs[i + 1], false);
    out.push_back({{x}, U(x)});
  }
  if (xs.back() < 1.0) out.push_back({{1.0}, U(1.0)});
  return out;
}

std::size_t default_mesh_resolution(const Domain& dom, std::size_t n) {
  switch (dom.kind()) {
    case DomainKind::circle:
    case DomainKind::segment: return std::max<std::size_t>(64, 64 * n);
    case DomainKind::sphere: return std::max<std::size_t>(600, 64 * n);
    case DomainKind::ball: return std::max<std::size_t>(1200, 96 * n);
  }
  return 64 * n;
}

// Typical spacing of a mesh with `res` points.
double mesh_spacing(const Domain& dom, std::size_t res) {
  return std::pow(dom.hausdorff_measure() / static_cast<double>(res), 1.0 / dom.dim());
}

// Mesh seeds (lowest potential first, mutually separated) plus warm starts,
// each polished by projected descent, then deduplicated.
std::vector<LocalMin> mesh_minima(const Configuration& config, double p, const PointSet& mesh, double spacing,
                                  const std::vector<Vec>& warm) {
  const Domain& dom = config.domain();
  Vec u(mesh.size());
  kernels::potential_at(config.points(), mesh, p, u);
  std::vector<std::size_t> order(mesh.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });

  std::vector<Vec> seeds = warm;
  const std::size_t max_seeds = warm.size() + 4 * config.size() + 8;
  const double sep2 = 4.0 * spacing * spacing;
  const double umin = u[order.front()];
  for (std::size_t idx : order) {
    if (seeds.size() >= max_seeds || u[idx] > 2.0 * umin) break;
    bool far = true;
    for (const Vec& s : seeds) {
      if (squared_distance(s, mesh[idx]) < sep2) {
        far = false;
        break;
      }
    }
    if (far) seeds.emplace_back(mesh[idx].begin(), mesh[idx].end());
  }

  std::vector<LocalMin> found(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    Vec x = seeds[i];
    const double v = descend(config.points(), dom, p, x);
    found[i] = {std::move(x), v};
  }
  std::stable_sort(found.begin(), found.end(), [](const LocalMin& a, const LocalMin& b) { return a.value < b.value; });
  std::vector<LocalMin> out;
  for (LocalMin& m : found) {
    if (!std::isfinite(m.value)) continue;
    bool dup = false;
    for (const LocalMin& o : out) {
      if (squared_distance(o.x, m.x) < 1e-8) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(m));
  }
  return out;
}

std::vector<LocalMin> minima_with(const Configuration& config, double p, const PointSet* mesh, double spacing,
                                  const std::vector<Vec>& warm) {
  auto sorted = [](std::vector<LocalMin> v) {
    std::stable_sort(v.begin(), v.end(), [](const LocalMin& a, const LocalMin& b) { return a.value < b.value; });
    return v;
  };
  switch (config.domain().kind()) {
    case DomainKind::circle: return sorted(circle_minima(config, p));
    case DomainKind::segment: return sorted(segment_minima(config, p));
    default: break;
  }
  if (mesh != nullptr) return mesh_minima(config, p, *mesh, spacing, warm);
  const std::size_t res = default_mesh_resolution(config.domain(), config.size());
  const PointSet local = grid_points(config.domain(), res);
  return mesh_minima(config, p, local, mesh_spacing(config.domain(), res), warm);
}

// ---------------------------------------------------------------------------
// Certified inner minimum.

struct CellEval {
  double value = kInf;  // potential at the representative point
  double lower = kInf;  // lower bound over the cell
};

CellEval eval_cell(const Domain& dom, const PointSet& nodes, const kernels::RieszKernel& k, double p,
                   const cells::Geometry& geo) {
  const std::size_t D = static_cast<std::size_t>(dom.ambient_dim());
  const double r = geo.radius;
  std::array<double, kMaxAmbientDim> g{};
  double u = 0.0, lb0 = 0.0, hess = 0.0;
  bool separated = true;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const auto y = nodes[j];
    double r2 = 0.0;
    for (std::size_t a = 0; a < D; ++a) {
      const double t = geo.point[a] - y[a];
      r2 += t * t;
    }
    const double dj = std::sqrt(r2);
    const double v = k.from_sq(r2);
    u += v;
    const double c = -p * v / r2;
    for (std::size_t a = 0; a < D; ++a) g[a] += c * (geo.point[a] - y[a]);
    const double far = dj + r;
    lb0 += k.from_sq(far * far);
    if (dj > r) {
      const double e = dj - r;
      hess += p * (p + 1.0) * k.from_sq(e * e) / (e * e);
    } else {
      separated = false;
    }
  }
  CellEval out;
  out.value = u;
  out.lower = lb0;
  if (separated && std::isfinite(u)) {
    double lb1;
    if (dom.is_sphere_like() || geo.on_boundary) {
      double s = 0.0;
      for (std::size_t a = 0; a < D; ++a) s += g[a] * geo.point[a];
      double gt2 = 0.0;
      for (std::size_t a = 0; a < D; ++a) {
        const double t = g[a] - s * geo.point[a];
        gt2 += t * t;
      }
      const double gt = std::sqrt(gt2);
      if (dom.is_sphere_like()) {
        // (x - m) . m = -|x - m|^2 / 2 on the sphere.
        lb1 = u - r * gt - 0.5 * r * r * (std::max(s, 0.0) + hess);
      } else {
        // (x - m) . m <= 0 inside the ball.
        lb1 = u - r * (gt + std::max(s, 0.0)) - 0.5 * r * r * hess;
      }
    } else {
      double g2 = 0.0;
      for (std::size_t a = 0; a < D; ++a) g2 += g[a] * g[a];
      lb1 = u - r * std::sqrt(g2) - 0.5 * r * r * hess;
    }
    out.lower = std::max(out.lower, lb1);
  }
  return out;
}

double initial_half(const Domain& dom, std::size_t n) {
  switch (dom.kind()) {
    case DomainKind::circle: return kPi / (4.0 * static_cast<double>(std::max<std::size_t>(n, 2)));
    case DomainKind::segment: return 1.0 / (8.0 * static_cast<double>(n));
    case DomainKind::sphere:
    case DomainKind::ball: return 0.125;
  }
  return 0.125;
}

PolarizationResult certify(const Configuration& config, double p, double tol, const InnerMinOptions& opts,
                           LocalMin incumbent) {
  const Domain& dom = config.domain();
  const kernels::RieszKernel k(p);
  PolarizationResult res;
  res.value = incumbent.value;
  res.argmin = incumbent.x;
  res.tolerance = tol;
  std::vector<cells::Cell> level = cells::initial_cells(dom, initial_half(dom, config.size()));
  std::vector<CellEval> evals;
  std::vector<cells::Geometry> geos;
  for (int step = 0;; ++step) {
    if (level.empty()) {
      res.refinement_steps = step;
      break;
    }
    if (step >= opts.max_levels || res.mesh_size + level.size() > opts.max_cells) {
      throw NonconvergenceError("inner_min: certificate not reached within the cell budget (" +
                                std::to_string(res.mesh_size) + " cells, " + std::to_string(step) + " levels)");
    }
    const std::size_t m = level.size();
    evals.assign(m, CellEval{});
    geos.assign(m, cells::Geometry{});
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < m; ++i) {
      geos[i] = cells::geometry(dom, level[i]);
      if (!geos[i].empty) evals[i] = eval_cell(dom, config.points(), k, p, geos[i]);
    }
    res.mesh_size += m;
    // Lowest index wins among equal values.
    for (std::size_t i = 0; i < m; ++i) {
      if (evals[i].value < res.value) {
        res.value = evals[i].value;
        res.argmin.assign(geos[i].point.begin(), geos[i].point.begin() + dom.ambient_dim());
      }
    }
    std::vector<cells::Cell> next;
    for (std::size_t i = 0; i < m; ++i) {
      if (geos[i].empty) continue;
      if (evals[i].lower < res.value - tol) cells::split(dom, level[i], next);
      if (res.mesh_size + next.size() > opts.max_cells) break;
    }
    level = std::move(next);
  }
  // Cell bounds are computed in floating point, so no gap below the rounding
  // of an n-term sum is claimed.
  const double rounding = 4.0 * static_cast<double>(config.size()) * std::numeric_limits<double>::epsilon() * res.value;
  res.tolerance = std::max(tol, rounding);
  // Polishing can only lower the incumbent, so the certificate still holds.
  if (dom.kind() == DomainKind::sphere || dom.kind() == DomainKind::ball) {
    Vec x = res.argmin;
    const double v = descend(config.points(), dom, p, x);
    if (v < res.value) {
      res.value = v;
      res.argmin = x;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Outer max-min solver.

struct Evaluated {
  double value = -kInf;
  std::vector<LocalMin> minima;
};

class MaxMinSolver {
 public:
  MaxMinSolver(const Domain& dom, std::size_t n, double p, const MaxMinOptions& opts)
      : dom_(dom), n_(n), p_(p), opts_(opts), D_(static_cast<std::size_t>(dom.ambient_dim())) {
    const std::size_t per = opts.mesh_per_point;
    const std::size_t res = per > 0 ? std::max<std::size_t>(16, per * n) : default_mesh_resolution(dom, n);
    mesh_ = grid_points(dom, res);
    spacing_ = mesh_spacing(dom, res);
  }

  const PointSet& mesh() const { return mesh_; }

  Evaluated evaluate(const PointSet& pts, const std::vector<LocalMin>* previous) const {
    std::vector<Vec> warm;
    if (previous != nullptr) {
      for (const LocalMin& m : *previous) {
        if (warm.size() >= 2 * n_ + 8) break;
        warm.push_back(m.x);
      }
    }
    const Configuration config(dom_, pts);
    Evaluated ev;
    ev.minima = minima_with(config, p_, &mesh_, spacing_, warm);
    ev.value = ev.minima.empty() ? -kInf : ev.minima.front().value;
    return ev;
  }

  // Annealed softmin ascent over the mesh.
  void anneal(PointSet& pts) const {
    Vec u(mesh_.size());
    kernels::potential_at(pts, mesh_, p_, u);
    const double umin = *std::min_element(u.begin(), u.end());
    if (!std::isfinite(umin) || umin <= 0.0) return;
    Vec grad(pts.coords().size());
    double alpha = -1.0;
    for (int stage = 0; stage < opts_.stages; ++stage) {
      const double beta = std::ldexp(1.0, stage) / umin;
      auto cur = kernels::softmin_gradient(pts, mesh_, p_, beta, grad);
      for (int it = 0; it < opts_.iterations_per_stage; ++it) {
        project_gradient(pts, grad);
        const double gn = norm(grad);
        if (!(gn > 0.0) || !std::isfinite(gn)) break;
        if (alpha < 0.0) alpha = 0.05 / gn;
        PointSet trial = pts;
        bool accepted = false;
        Vec tgrad(grad.size());
        for (int bt = 0; bt < 30; ++bt) {
          move(pts, grad, alpha, trial);
          double gain = 0.0;
          for (std::size_t a = 0; a < grad.size(); ++a) gain += grad[a] * (trial.coords()[a] - pts.coords()[a]);
          const auto next = kernels::softmin_gradient(trial, mesh_, p_, beta, tgrad);
          if (std::isfinite(next.value) && next.value >= cur.value + 1e-4 * gain) {
            pts = trial;
            grad = tgrad;
            cur = next;
            accepted = true;
            alpha *= 1.5;
            break;
          }
          alpha *= 0.5;
        }
        if (!accepted) break;
      }
    }
  }

  // Proximal bundle ascent on the exact min over local minimizers.
  Evaluated polish(PointSet& pts) const {
    Evaluated cur = evaluate(pts, nullptr);
    double mu = -1.0;
    int stalls = 0;
    std::vector<double> history;
    for (int it = 0; it < opts_.polish_iterations; ++it) {
      const double F = cur.value;
      if (!std::isfinite(F)) break;
      // Give up once 50 iterations gained less than 1e-7 relative.
      history.push_back(F);
      if (history.size() > 50 && F - history[history.size() - 51] < 1e-7 * std::abs(F)) break;
      // Pieces close enough to the min to matter for the next step.
      std::vector<const LocalMin*> active;
      for (const LocalMin& m : cur.minima) {
        if (m.value <= F + 0.5 * std::abs(F) && active.size() < 2 * n_ + 8) active.push_back(&m);
      }
      const std::size_t K = active.size();
      const std::size_t N = pts.coords().size();
      std::vector<Vec> G(K, Vec(N, 0.0));
      Vec V(K);
      for (std::size_t a = 0; a < K; ++a) {
        V[a] = active[a]->value;
        node_gradient(pts, active[a]->x, G[a]);
      }
      if (mu < 0.0) {
        double gmax = 0.0;
        for (const Vec& g : G) gmax = std::max(gmax, norm(g));
        if (!(gmax > 0.0)) break;
        mu = gmax / 0.05;
      }
      Vec delta(N);
      const double pred = bundle_step(pts, G, V, F, mu, delta);
      if (!(pred > 1e-15 * std::abs(F))) break;
      PointSet trial = pts;
      for (std::size_t a = 0; a < N; ++a) trial.coords()[a] += delta[a];
      for (std::size_t j = 0; j < n_; ++j) dom_.project(trial.mutable_point(j));
      Evaluated next = evaluate(trial, &cur.minima);
      if (next.value - F >= 0.1 * pred) {
        pts = std::move(trial);
        cur = std::move(next);
        mu = std::max(mu / 3.0, 1e-12);
        stalls = 0;
      } else {
        mu *= 5.0;
        if (++stalls > 40) break;
      }
    }
    return cur;
  }

 private:
  void project_gradient(const PointSet& pts, Vec& grad) const {
    for (std::size_t j = 0; j < n_; ++j) {
      std::span<double> gj(grad.data() + j * D_, D_);
      tangent_project(dom_, pts[j], gj);
    }
  }

  void move(const PointSet& pts, const Vec& dir, double alpha, PointSet& out) const {
    for (std::size_t a = 0; a < dir.size(); ++a) out.coords()[a] = pts.coords()[a] + alpha * dir[a];
    for (std::size_t j = 0; j < n_; ++j) dom_.project(out.mutable_point(j));
  }

  // d U(x) / d x_j = p |x - x_j|^{-p-2} (x - x_j), tangent-projected.
  void node_gradient(const PointSet& pts, const Vec& x, Vec& out) const {
    const kernels::RieszKernel k(p_);
    for (std::size_t j = 0; j < n_; ++j) {
      const auto y = pts[j];
      const double r2 = squared_distance(x, y);
      const double c = p_ * k.from_sq(r2) / r2;
      std::span<double> gj(out.data() + j * D_, D_);
      for (std::size_t a = 0; a < D_; ++a) gj[a] = c * (x[a] - y[a]);
      tangent_project(dom_, y, gj);
    }
  }

  // Solves the dual simplex QP of the proximal cutting-plane model and
  // returns the predicted gain. Boundary nodes pushed outward get their
  // normal components frozen and the QP is re-solved.
  double bundle_step(const PointSet& pts, std::vector<Vec>& G, const Vec& V, double F, double mu, Vec& delta) const {
    const std::size_t K = G.size();
    const std::size_t N = delta.size();
    std::vector<char> frozen(n_, 0);
    Vec nrm(D_);
    for (std::size_t round = 0; round <= n_; ++round) {
      std::vector<double> Q(K * K), c(K);
      for (std::size_t a = 0; a < K; ++a) {
        c[a] = V[a];
        for (std::size_t b = 0; b <= a; ++b) {
          double s = 0.0;
          for (std::size_t i = 0; i < N; ++i) s += G[a][i] * G[b][i];
          Q[a * K + b] = Q[b * K + a] = s / mu;
        }
      }
      const std::vector<double> lambda = solve_simplex_qp(Q, c);
      std::fill(delta.begin(), delta.end(), 0.0);
      for (std::size_t a = 0; a < K; ++a) {
        for (std::size_t i = 0; i < N; ++i) delta[i] += lambda[a] * G[a][i] / mu;
      }
      bool changed = false;
      if (!dom_.is_sphere_like()) {
        for (std::size_t j = 0; j < n_; ++j) {
          if (frozen[j] || !boundary_normal(dom_, pts[j], nrm)) continue;
          double out = 0.0;
          for (std::size_t a = 0; a < D_; ++a) out += delta[j * D_ + a] * nrm[a];
          if (out <= 0.0) continue;
          frozen[j] = 1;
          changed = true;
          for (Vec& g : G) {
            double s = 0.0;
            for (std::size_t a = 0; a < D_; ++a) s += g[j * D_ + a] * nrm[a];
            for (std::size_t a = 0; a < D_; ++a) g[j * D_ + a] -= s * nrm[a];
          }
        }
      }
      if (!changed) break;
    }
    double model = kInf;
    for (std::size_t a = 0; a < K; ++a) {
      double s = V[a];
      for (std::size_t i = 0; i < N; ++i) s += G[a][i] * delta[i];
      model = std::min(model, s);
    }
    return model - F;
  }

  Domain dom_;
  std::size_t n_;
  double p_;
  MaxMinOptions opts_;
  std::size_t D_;
  PointSet mesh_;
  double spacing_ = 0.0;
};

PointSet structured_points(const Domain& dom, std::size_t n) {
  PointSet pts(dom.ambient_dim());
  switch (dom.kind()) {
    case DomainKind::circle:
      for (double t : equally_spaced_angles(n, 0.0)) {
        const double x[2] = {std::cos(t), std::sin(t)};
        pts.push_back(x);
      }
      break;
    case DomainKind::segment:
      for (std::size_t j = 0; j < n; ++j) {
        const double x = n == 1 ? 0.5 : static_cast<double>(j) / static_cast<double>(n - 1);
        pts.push_back(std::span<const double>(&x, 1));
      }
      break;
    case DomainKind::sphere:
      if (dom.dim() == 2) return fibonacci_sphere(n);
      return sample_uniform(dom, n, 0x5eedULL).points();
    case DomainKind::ball: {
      const Vec origin(dom.dim(), 0.0);
      for (std::size_t j = 0; j < n; ++j) pts.push_back(origin);
      break;
    }
  }
  return pts;
}

double default_certify_tol(const Domain& dom) {
  switch (dom.kind()) {
    case DomainKind::circle:
    case DomainKind::segment: return 1e-9;
    case DomainKind::sphere: return 1e-6;
    case DomainKind::ball: return 1e-4;
  }
  return 1e-6;
}

}  // namespace

std::vector<LocalMin> local_minima(const Configuration& config, double p) {
  if (!(p > 0.0)) throw InvalidArgument("local_minima: p must be positive");
  return minima_with(config, p, nullptr, 0.0, {});
}

PolarizationResult inner_min(const Configuration& config, double p, double tol, const InnerMinOptions& opts) {
  if (!(p > 0.0)) throw InvalidArgument("inner_min: p must be positive");
  if (!(tol > 0.0)) throw InvalidArgument("inner_min: tol must be positive");
  std::vector<LocalMin> minima = local_minima(config, p);
  LocalMin incumbent;
  if (minima.empty()) {
    incumbent.x.assign(config[0].begin(), config[0].end());
    incumbent.value = kInf;
  } else {
    incumbent = minima.front();
    for (const LocalMin& m : minima) {
      if (m.value < incumbent.value) incumbent = m;
    }
  }
  return certify(config, p, tol, opts, std::move(incumbent));
}

double equally_spaced_value(std::size_t n, double p) {
  if (n < 1) throw InvalidArgument("equally_spaced_value: n must be positive");
  if (!(p > 0.0)) throw InvalidArgument("equally_spaced_value: p must be positive");
  return kernels::equally_spaced_sum(n, p);
}

MaxMinResult maximize_polarization(const Domain& domain, std::size_t n, double p, const MaxMinOptions& opts) {
  if (n < 1) throw InvalidArgument("maximize_polarization: n must be positive");
  if (!(p > 0.0)) throw InvalidArgument("maximize_polarization: p must be positive");
  if (opts.restarts < 1) throw InvalidArgument("maximize_polarization: restarts must be positive");
  const MaxMinSolver solver(domain, n, p, opts);
  const int R = opts.restarts;
  std::vector<PointSet> configs(static_cast<std::size_t>(R));
  std::vector<double> values(static_cast<std::size_t>(R), -kInf);

#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < R; ++r) {
    PointSet pts = (r == 0 && opts.structured_start)
                       ? structured_points(domain, n)
                       : sample_uniform(domain, n, opts.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(r))
                             .points();
    solver.anneal(pts);
    const Evaluated ev = solver.polish(pts);
    configs[static_cast<std::size_t>(r)] = std::move(pts);
    values[static_cast<std::size_t>(r)] = ev.value;
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < values.size(); ++r) {
    if (values[r] > values[best]) best = r;
  }
  int agree = 0;
  for (double v : values) {
    if (std::abs(v - values[best]) <= opts.agree_tol * std::abs(values[best])) ++agree;
  }
  MaxMinResult out{Configuration::projected(domain, configs[best]), values[best], R, agree >= 2 || R == 1, values, {}};
  if (opts.certify) {
    const double rel = opts.certify_tol > 0.0 ? opts.certify_tol : default_certify_tol(domain);
    try {
      out.certificate = inner_min(out.config, p, rel * std::max(std::abs(out.value), 1e-300));
      out.value = out.certificate.value;
    } catch (const NonconvergenceError&) {
      out.converged = false;
    }
  }
  return out;
}

double discrete_polarization(std::span<const double> angles, std::size_t n, double p) {
  if (angles.size() != n) throw InvalidArgument("discrete_polarization: expected exactly n angles");
  if (n < 1) throw InvalidArgument("discrete_polarization: n must be positive");
  double best = kInf;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    best = std::min(best, circle_A(angles, p, kPi * static_cast<double>(k) / static_cast<double>(n)));
  }
  return best;
}

double discrete_optimum(std::size_t n, double p) {
  if (n < 1) throw InvalidArgument("discrete_optimum: n must be positive");
  const Vec roots = equally_spaced_angles(n, 0.0);
  return circle_A(roots, p, kPi / (2.0 * static_cast<double>(n)));
}

std::vector<double> discrete_optimal_angles(std::size_t n) {
  return equally_spaced_angles(n, kPi / (2.0 * static_cast<double>(n)));
}

double polarization_at_product_max(std::span<const double> angles, double p) {
  return circle_A(angles, p, product_max_point(angles));
}

}  // namespace rpl
