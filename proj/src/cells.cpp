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

#include "rpl/cells.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rpl::cells {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Count of subdivisions per parameter axis of length `len`.
int divisions(double len, double max_half) {
  return std::max(1, static_cast<int>(std::ceil(len / (2.0 * max_half) - 1e-12)));
}

// Enumerates all cells of a k^dim grid over [-1,1]^dim.
void grid_cells(int dim, int k, int face, std::vector<Cell>& out) {
  const double half = 1.0 / k;
  std::array<int, kMaxAmbientDim> idx{};
  for (;;) {
    Cell c;
    c.face = face;
    c.half = half;
    for (int a = 0; a < dim; ++a) c.center[a] = -1.0 + (2 * idx[a] + 1) * half;
    out.push_back(c);
    int a = 0;
    while (a < dim && ++idx[a] == k) idx[a++] = 0;
    if (a == dim) break;
  }
}

}  // namespace

int param_dim(const Domain& domain) {
  switch (domain.kind()) {
    case DomainKind::circle:
    case DomainKind::segment: return 1;
    case DomainKind::sphere:
    case DomainKind::ball: return domain.dim();
  }
  return 1;
}

std::vector<Cell> initial_cells(const Domain& domain, double max_half) {
  std::vector<Cell> out;
  switch (domain.kind()) {
    case DomainKind::circle: {
      const int k = divisions(kTwoPi, max_half);
      for (int i = 0; i < k; ++i) {
        Cell c;
        c.half = std::numbers::pi / k;
        c.center[0] = (2 * i + 1) * c.half;
        out.push_back(c);
      }
      break;
    }
    case DomainKind::segment: {
      const int k = divisions(1.0, max_half);
      for (int i = 0; i < k; ++i) {
        Cell c;
        c.half = 0.5 / k;
        c.center[0] = (2 * i + 1) * c.half;
        out.push_back(c);
      }
      break;
    }
    case DomainKind::sphere: {
      const int d = domain.dim();
      const int k = divisions(2.0, max_half);
      for (int face = 0; face < 2 * (d + 1); ++face) grid_cells(d, k, face, out);
      break;
    }
    case DomainKind::ball: {
      const int k = divisions(2.0, max_half);
      grid_cells(domain.dim(), k, 0, out);
      std::erase_if(out, [&](const Cell& c) { return geometry(domain, c).empty; });
      break;
    }
  }
  return out;
}

Geometry geometry(const Domain& domain, const Cell& cell) {
  Geometry g;
  switch (domain.kind()) {
    case DomainKind::circle:
      g.point[0] = std::cos(cell.center[0]);
      g.point[1] = std::sin(cell.center[0]);
      g.radius = 2.0 * std::sin(0.5 * std::min(cell.half, std::numbers::pi));
      break;
    case DomainKind::segment:
      g.point[0] = cell.center[0];
      g.radius = cell.half;
      break;
    case DomainKind::sphere: {
      const int d = domain.dim();
      const int axis = cell.face / 2;
      const double sign = (cell.face % 2 == 0) ? 1.0 : -1.0;
      double norm2 = 1.0;
      int a = 0;
      for (int k = 0; k <= d; ++k) {
        if (k == axis) {
          g.point[k] = sign;
        } else {
          g.point[k] = cell.center[a++];
          norm2 += g.point[k] * g.point[k];
        }
      }
      const double inv = 1.0 / std::sqrt(norm2);
      for (int k = 0; k <= d; ++k) g.point[k] *= inv;
      // Radial projection from outside the unit ball is 1-Lipschitz.
      g.radius = cell.half * std::sqrt(static_cast<double>(d));
      break;
    }
    case DomainKind::ball: {
      const int d = domain.dim();
      const double diag = cell.half * std::sqrt(static_cast<double>(d));
      double norm2 = 0.0;
      for (int k = 0; k < d; ++k) norm2 += cell.center[k] * cell.center[k];
      const double norm = std::sqrt(norm2);
      if (norm - diag > 1.0) {
        g.empty = true;
        return g;
      }
      if (norm + diag >= 1.0 && norm > 0.0) {
        for (int k = 0; k < d; ++k) g.point[k] = cell.center[k] / norm;
        g.radius = diag + std::abs(norm - 1.0);
        g.on_boundary = true;
      } else {
        for (int k = 0; k < d; ++k) g.point[k] = cell.center[k];
        g.radius = diag;
      }
      break;
    }
  }
  return g;
}

void split(const Domain& domain, const Cell& cell, std::vector<Cell>& out) {
  const int dim = param_dim(domain);
  const double h = 0.5 * cell.half;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    Cell c = cell;
    c.half = h;
    c.level = cell.level + 1;
    for (int a = 0; a < dim; ++a) c.center[a] += ((mask >> a) & 1) ? h : -h;
    if (domain.kind() == DomainKind::ball && geometry(domain, c).empty) continue;
    out.push_back(c);
  }
}

}  // namespace rpl::cells
