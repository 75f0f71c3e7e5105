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

#include <array>
#include <vector>

#include "rpl/domain.hpp"

// Adaptive cell decomposition of a domain for branch-and-bound searches.
// Each cell maps to a representative domain point and a radius such that
// every domain point belonging to the cell lies within that radius of it.
namespace rpl::cells {

struct Cell {
  // Sphere: cube face, encoded as 2 * axis + (sign < 0). Unused otherwise.
  int face = 0;
  // Parameter-space center: angle (circle), x (segment), face coordinates
  // (sphere) or cube center (ball).
  std::array<double, kMaxAmbientDim> center{};
  double half = 0.0;
  int level = 0;
};

struct Geometry {
  std::array<double, kMaxAmbientDim> point{};
  double radius = 0.0;
  // Ball only: point was snapped onto the boundary sphere, so every domain
  // point x of the cell satisfies (x - point) . point <= 0.
  bool on_boundary = false;
  // Ball only: the cube misses the ball entirely.
  bool empty = false;
};

/// Number of parameter coordinates of a cell.
int param_dim(const Domain& domain);

/// Uniform cover by cells with half-width at most max_half.
std::vector<Cell> initial_cells(const Domain& domain, double max_half);

Geometry geometry(const Domain& domain, const Cell& cell);

/// Appends the 2^param_dim children of cell to out.
void split(const Domain& domain, const Cell& cell, std::vector<Cell>& out);

}  // namespace rpl::cells
