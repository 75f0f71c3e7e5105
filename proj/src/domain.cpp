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

#include "rpl/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "rpl/cells.hpp"
#include "rpl/constants.hpp"
#include "rpl/error.hpp"
#include "rpl/kernels.hpp"

namespace rpl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGoldenAngle = 2.399963229728653;  // pi (3 - sqrt 5)

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

// Cell centers of an m^(D-1) grid on each face of [-1,1]^D, projected to the
// unit sphere of R^D.
void cube_sphere(int D, std::size_t m, PointSet& out) {
  const int k = D - 1;
  std::vector<double> x(D);
  std::vector<std::size_t> idx(k, 0);
  for (int face = 0; face < 2 * D; ++face) {
    const int axis = face / 2;
    const double sign = (face % 2 == 0) ? 1.0 : -1.0;
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      int a = 0;
      for (int c = 0; c < D; ++c) {
        x[c] = (c == axis) ? sign : -1.0 + (2.0 * static_cast<double>(idx[a++]) + 1.0) / static_cast<double>(m);
      }
      const double inv = 1.0 / norm(x);
      for (double& v : x) v *= inv;
      out.push_back(x);
      int b = 0;
      while (b < k && ++idx[b] == m) idx[b++] = 0;
      if (b == k) break;
    }
  }
}

// About `count` points on the unit sphere of R^D.
void unit_sphere_mesh(int D, std::size_t count, double radius, PointSet& out) {
  std::vector<double> x(D);
  if (D == 1) {
    x[0] = radius;
    out.push_back(x);
    x[0] = -radius;
    out.push_back(x);
    return;
  }
  PointSet tmp(D);
  if (D == 2) {
    for (std::size_t k = 0; k < count; ++k) {
      const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(count);
      x[0] = std::cos(t);
      x[1] = std::sin(t);
      tmp.push_back(x);
    }
  } else if (D == 3) {
    tmp = fibonacci_sphere(count);
  } else {
    const double per_face = static_cast<double>(count) / (2.0 * D);
    const auto m = static_cast<std::size_t>(std::max(1.0, std::round(std::pow(per_face, 1.0 / (D - 1)))));
    cube_sphere(D, m, tmp);
  }
  for (double& v : tmp.coords()) v *= radius;
  for (std::size_t i = 0; i < tmp.size(); ++i) out.push_back(tmp[i]);
}

double min_distance(const PointSet& net, std::span<const double> x) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < net.size(); ++j) best = std::min(best, squared_distance(net[j], x));
  return std::sqrt(best);
}

}  // namespace

std::string kind_name(DomainKind kind) {
  switch (kind) {
    case DomainKind::circle: return "circle";
    case DomainKind::sphere: return "sphere";
    case DomainKind::ball: return "ball";
    case DomainKind::segment: return "segment";
  }
  return "unknown";
}

Domain Domain::sphere(int d) {
  if (d < 1 || d + 1 > kMaxAmbientDim) throw InvalidArgument("sphere dimension must be in [1, 7]");
  if (d == 1) return circle();
  return Domain(DomainKind::sphere, d);
}

Domain Domain::ball(int d) {
  if (d < 1 || d > kMaxAmbientDim) throw InvalidArgument("ball dimension must be in [1, 8]");
  return Domain(DomainKind::ball, d);
}

Domain Domain::from_name(const std::string& kind, int d) {
  if (kind == "circle") return circle();
  if (kind == "segment") return segment();
  if (kind == "sphere") return sphere(d);
  if (kind == "ball") return ball(d);
  throw InvalidArgument("unknown domain kind '" + kind + "'");
}

int Domain::ambient_dim() const {
  switch (kind_) {
    case DomainKind::circle: return 2;
    case DomainKind::sphere: return d_ + 1;
    case DomainKind::ball: return d_;
    case DomainKind::segment: return 1;
  }
  return 1;
}

double Domain::hausdorff_measure() const {
  switch (kind_) {
    case DomainKind::circle: return 2.0 * kPi;
    case DomainKind::sphere: return sphere_area(d_);
    case DomainKind::ball: return unit_ball_volume(d_);
    case DomainKind::segment: return 1.0;
  }
  return 0.0;
}

double Domain::diameter() const { return kind_ == DomainKind::segment ? 1.0 : 2.0; }

std::string Domain::name() const {
  if (kind_ == DomainKind::circle || kind_ == DomainKind::segment) return kind_name(kind_);
  return kind_name(kind_) + "(d=" + std::to_string(d_) + ")";
}

bool Domain::contains(std::span<const double> x, double tol) const {
  if (static_cast<int>(x.size()) != ambient_dim()) return false;
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  switch (kind_) {
    case DomainKind::circle:
    case DomainKind::sphere: return std::abs(norm(x) - 1.0) <= tol;
    case DomainKind::ball: return norm(x) <= 1.0 + tol;
    case DomainKind::segment: return x[0] >= -tol && x[0] <= 1.0 + tol;
  }
  return false;
}

void Domain::project(std::span<double> x) const {
  switch (kind_) {
    case DomainKind::circle:
    case DomainKind::sphere: {
      const double r = norm(x);
      if (r == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        x[0] = 1.0;
      } else {
        for (double& v : x) v /= r;
      }
      break;
    }
    case DomainKind::ball: {
      const double r = norm(x);
      if (r > 1.0) {
        for (double& v : x) v /= r;
      }
      break;
    }
    case DomainKind::segment: x[0] = std::clamp(x[0], 0.0, 1.0); break;
  }
}

Configuration::Configuration(Domain domain, PointSet points) : domain_(domain), points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgument("configuration must contain at least one point");
  if (points_.dim() != domain_.ambient_dim()) throw InvalidArgument("point dimension does not match the domain");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!domain_.contains(points_[i])) {
      throw InvalidArgument("point " + std::to_string(i) + " is not in " + domain_.name());
    }
  }
}

Configuration Configuration::projected(Domain domain, PointSet points) {
  if (points.dim() == domain.ambient_dim()) {
    for (std::size_t i = 0; i < points.size(); ++i) domain.project(points.mutable_point(i));
  }
  return Configuration(domain, std::move(points));
}

Configuration circle_configuration(std::span<const double> angles) {
  PointSet pts(2);
  pts.reserve(angles.size());
  for (double t : angles) {
    const double x[2] = {std::cos(t), std::sin(t)};
    pts.push_back(x);
  }
  return Configuration(Domain::circle(), std::move(pts));
}

std::vector<double> circle_angles(const Configuration& config) {
  if (config.domain().kind() != DomainKind::circle) throw InvalidArgument("circle_angles: not a circle configuration");
  std::vector<double> out(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    double t = std::atan2(config[i][1], config[i][0]);
    if (t < 0.0) t += 2.0 * kPi;
    if (t >= 2.0 * kPi) t -= 2.0 * kPi;
    out[i] = t;
  }
  return out;
}

std::vector<double> equally_spaced_angles(std::size_t n, double offset) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = offset + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
  return out;
}

Configuration sample_uniform(const Domain& domain, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample_uniform: n must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int D = domain.ambient_dim();
  PointSet pts(D);
  pts.reserve(n);
  std::vector<double> x(D);
  for (std::size_t i = 0; i < n; ++i) {
    switch (domain.kind()) {
      case DomainKind::segment: x[0] = unif(rng); break;
      case DomainKind::circle: {
        const double t = 2.0 * kPi * unif(rng);
        x[0] = std::cos(t);
        x[1] = std::sin(t);
        break;
      }
      case DomainKind::sphere:
      case DomainKind::ball: {
        double r;
        do {
          for (double& v : x) v = normal(rng);
          r = norm(x);
        } while (r == 0.0);
        double scale = 1.0 / r;
        if (domain.kind() == DomainKind::ball) scale *= std::pow(unif(rng), 1.0 / D);
        for (double& v : x) v *= scale;
        break;
      }
    }
    pts.push_back(x);
  }
  return Configuration::projected(domain, std::move(pts));
}

PointSet fibonacci_sphere(std::size_t n) {
  PointSet pts(3);
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = kGoldenAngle * static_cast<double>(k);
    const double x[3] = {rho * std::cos(phi), rho * std::sin(phi), z};
    pts.push_back(x);
  }
  return pts;
}

PointSet grid_points(const Domain& domain, std::size_t resolution) {
  if (resolution < 2) throw InvalidArgument("grid: resolution must be at least 2");
  PointSet pts(domain.ambient_dim());
  switch (domain.kind()) {
    case DomainKind::circle: unit_sphere_mesh(2, resolution, 1.0, pts); break;
    case DomainKind::segment:
      for (std::size_t k = 0; k < resolution; ++k) {
        const double x = static_cast<double>(k) / static_cast<double>(resolution - 1);
        pts.push_back(std::span<const double>(&x, 1));
      }
      break;
    case DomainKind::sphere: unit_sphere_mesh(domain.dim() + 1, resolution, 1.0, pts); break;
    case DomainKind::ball: {
      const int d = domain.dim();
      // Equal-volume shells, one extra shell on the boundary, and the center.
      const auto shells = static_cast<std::size_t>(
          d == 1 ? std::max<std::size_t>(1, resolution / 2)
                 : std::max(1.0, std::ceil(std::pow(static_cast<double>(resolution), 1.0 / d))));
      const std::size_t per_shell = std::max<std::size_t>(2, resolution / shells);
      const std::vector<double> origin(d, 0.0);
      pts.push_back(origin);
      for (std::size_t k = 0; k < shells; ++k) {
        const double r = std::pow((static_cast<double>(k) + 0.5) / static_cast<double>(shells), 1.0 / d);
        unit_sphere_mesh(d, per_shell, r, pts);
      }
      unit_sphere_mesh(d, per_shell, 1.0, pts);
      break;
    }
  }
  return pts;
}

double estimate_fill_distance(const Domain& domain, const PointSet& mesh, std::size_t reference_resolution) {
  const PointSet ref = grid_points(domain, reference_resolution);
  std::vector<double> dmin(ref.size(), std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < mesh.size(); ++j) kernels::nearest_update(ref, mesh[j], dmin);
  return *std::max_element(dmin.begin(), dmin.end());
}

Mesh grid(const Domain& domain, std::size_t resolution) {
  Mesh out{grid_points(domain, resolution), 0.0};
  const double r = static_cast<double>(resolution);
  switch (domain.kind()) {
    case DomainKind::circle: out.fill_distance = 2.0 * std::sin(kPi / (2.0 * r)); break;
    case DomainKind::segment: out.fill_distance = 1.0 / (2.0 * (r - 1.0)); break;
    default: out.fill_distance = estimate_fill_distance(domain, out.points, 4 * resolution); break;
  }
  return out;
}

Configuration maximal_delta_net(const Domain& domain, double delta, std::uint64_t seed) {
  if (!(delta > 0.0) || !(delta < domain.diameter())) {
    throw InvalidArgument("maximal_delta_net: delta must lie in (0, diameter)");
  }
  const int d = domain.dim();
  // Candidate mesh with spacing about delta / 4.
  double want = domain.hausdorff_measure() * std::pow(4.0 / delta, d);
  if (domain.kind() == DomainKind::circle) want = std::ceil(want / 8.0) * 8.0;
  const auto res = static_cast<std::size_t>(std::clamp(want, 64.0, 200000.0));
  const PointSet cand = grid_points(domain, res);

  std::mt19937_64 rng(seed);
  std::size_t next = std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng);
  PointSet net(domain.ambient_dim());
  std::vector<double> dmin(cand.size(), std::numeric_limits<double>::infinity());
  for (;;) {
    net.push_back(cand[next]);
    kernels::nearest_update(cand, cand[next], dmin);
    next = static_cast<std::size_t>(std::max_element(dmin.begin(), dmin.end()) - dmin.begin());
    if (!(dmin[next] > delta)) break;
  }

  // Fill any gap the candidate mesh missed: min-distance is 1-Lipschitz, so a
  // cell is covered once D(center) + radius <= delta.
  std::vector<cells::Cell> stack = cells::initial_cells(domain, 0.5 * delta);
  std::reverse(stack.begin(), stack.end());
  const double floor_radius = 1e-9 * delta;
  std::size_t budget = 50'000'000;
  while (!stack.empty()) {
    if (--budget == 0) throw NonconvergenceError("maximal_delta_net: cell budget exhausted");
    const cells::Cell cell = stack.back();
    stack.pop_back();
    const cells::Geometry g = cells::geometry(domain, cell);
    if (g.empty) continue;
    const std::span<const double> m(g.point.data(), static_cast<std::size_t>(domain.ambient_dim()));
    const double dm = min_distance(net, m);
    if (dm + g.radius <= delta) continue;
    if (dm > delta) {
      net.push_back(m);
      stack.push_back(cell);
      continue;
    }
    if (g.radius < floor_radius) continue;
    std::vector<cells::Cell> kids;
    cells::split(domain, cell, kids);
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  return Configuration::projected(domain, std::move(net));
}

double covering_radius(const Domain& domain, const PointSet& net, double tol) {
  if (net.empty()) throw InvalidArgument("covering_radius: empty net");
  if (!(tol > 0.0)) throw InvalidArgument("covering_radius: tol must be positive");
  std::vector<cells::Cell> stack = cells::initial_cells(domain, 0.125);
  double best = 0.0;
  std::size_t budget = 50'000'000;
  while (!stack.empty()) {
    if (--budget == 0) throw NonconvergenceError("covering_radius: cell budget exhausted");
    const cells::Cell cell = stack.back();
    stack.pop_back();
    const cells::Geometry g = cells::geometry(domain, cell);
    if (g.empty) continue;
    const double dm =
        min_distance(net, std::span<const double>(g.point.data(), static_cast<std::size_t>(domain.ambient_dim())));
    best = std::max(best, dm);
    if (dm + g.radius <= best + tol) continue;
    cells::split(domain, cell, stack);
  }
  return best;
}

// Both integrals use the polar angle theta = arccos <x, y>, under which the
// normalized surface density is d tau_d sin^{d-1}(theta) and |x - y| is
// 2 sin(theta / 2). The substitution removes the endpoint singularities of the
// t = cos(theta) form for d = 1.
double cap_measure(int d, double r) {
  if (d < 1) throw RangeError("cap_measure: d must be positive");
  if (!(r > 0.0) || r > 2.0) throw RangeError("cap_measure: r must lie in (0, 2]");
  // On S^2 the cap measure is exactly r^2/4 (Archimedes), so the bound
  // tau_2 r^2 is attained; quadrature would miss it by rounding.
  if (d == 2) return tau(2) * (r * r);
  const double theta_r = 2.0 * std::asin(0.5 * r);
  if (d == 1) return std::min(1.0, theta_r / kPi);
  boost::math::quadrature::tanh_sinh<double> q;
  const double integral = q.integrate([&](double th) { return std::pow(std::sin(th), d - 1); }, 0.0, theta_r);
  return std::min(1.0, d * tau(d) * integral);
}

double annulus_potential_integral(int d, double p, double r) {
  if (d < 1) throw RangeError("annulus_potential_integral: d must be positive");
  if (!(p > 0.0)) throw RangeError("annulus_potential_integral: p must be positive");
  if (!(r > 0.0) || !(r < 2.0)) throw RangeError("annulus_potential_integral: r must lie in (0, 2)");
  const double theta_r = 2.0 * std::asin(0.5 * r);
  boost::math::quadrature::tanh_sinh<double> q;
  const double integral = q.integrate(
      [&](double th) { return std::pow(2.0 * std::sin(0.5 * th), -p) * std::pow(std::sin(th), d - 1); }, theta_r,
      kPi);
  return d * tau(d) * integral;
}

}  // namespace rpl
