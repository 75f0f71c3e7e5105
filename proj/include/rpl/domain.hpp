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
#include <string>
#include <vector>

#include "rpl/point_set.hpp"

namespace rpl {

inline constexpr double kMembershipTol = 1e-12;
inline constexpr int kMaxAmbientDim = 8;

enum class DomainKind { circle, sphere, ball, segment };

// "circle", "sphere", "ball", "segment".
std::string kind_name(DomainKind kind);

/// One of the four supported compact sets. Distances are always ambient
/// Euclidean.
///
///   circle     S^1 in R^2            H_1 = 2 pi
///   sphere(d)  S^d in R^(d+1)        H_d = surface area
///   ball(d)    B^d in R^d            H_d = volume beta_d
///   segment    [0, 1] in R^1         H_1 = 1
class Domain {
 public:
  static Domain circle() { return Domain(DomainKind::circle, 1); }
  // sphere(1) is the circle.
  static Domain sphere(int d);
  static Domain ball(int d);
  static Domain segment() { return Domain(DomainKind::segment, 1); }
  static Domain from_name(const std::string& kind, int d);

  DomainKind kind() const { return kind_; }
  int dim() const { return d_; }
  int ambient_dim() const;
  double hausdorff_measure() const;
  double diameter() const;
  // Circle and sphere: the unit-norm manifolds.
  bool is_sphere_like() const { return kind_ == DomainKind::circle || kind_ == DomainKind::sphere; }
  std::string name() const;

  bool contains(std::span<const double> x, double tol = kMembershipTol) const;
  // Normalize for sphere/circle, radial clamp for the ball, clamp to [0,1].
  void project(std::span<double> x) const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(DomainKind kind, int d) : kind_(kind), d_(d) {}
  DomainKind kind_ = DomainKind::circle;
  int d_ = 1;
};

/// n >= 1 points of a domain, not necessarily distinct.
class Configuration {
 public:
  // Throws InvalidArgument if a point fails membership or the set is empty.
  Configuration(Domain domain, PointSet points);
  // Projects every point onto the domain first.
  static Configuration projected(Domain domain, PointSet points);

  const Domain& domain() const { return domain_; }
  const PointSet& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::span<const double> operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Domain domain_;
  PointSet points_;
};

// Circle helpers; angles are measured from the positive x axis.
Configuration circle_configuration(std::span<const double> angles);
std::vector<double> circle_angles(const Configuration& config);
std::vector<double> equally_spaced_angles(std::size_t n, double offset = 0.0);

Configuration sample_uniform(const Domain& domain, std::size_t n, std::uint64_t seed);

struct Mesh {
  PointSet points;
  // Largest distance from a domain point to the mesh. Exact for circle and
  // segment, estimated against a 4x finer reference mesh otherwise.
  double fill_distance = 0.0;
};

Mesh grid(const Domain& domain, std::size_t resolution);
// Same points as grid() without the fill-distance computation.
PointSet grid_points(const Domain& domain, std::size_t resolution);
PointSet fibonacci_sphere(std::size_t n);
double estimate_fill_distance(const Domain& domain, const PointSet& mesh, std::size_t reference_resolution);

// Greedy farthest-point net, completed until no domain point lies farther
// than delta from it.
Configuration maximal_delta_net(const Domain& domain, double delta, std::uint64_t seed);
// Upper bound on sup_{x in domain} min_j |x - x_j|, sharp to within tol.
double covering_radius(const Domain& domain, const PointSet& net, double tol);

double cap_measure(int d, double r);
double annulus_potential_integral(int d, double p, double r);

}  // namespace rpl
