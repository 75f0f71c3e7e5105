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

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace rpl {

/// Row-major list of points in R^dim.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim) : dim_(dim) {}
  PointSet(int dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
    assert(dim_ > 0 && coords_.size() % static_cast<std::size_t>(dim_) == 0);
  }

  int dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / static_cast<std::size_t>(dim_); }
  bool empty() const { return coords_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  std::span<double> mutable_point(std::size_t i) {
    return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }

  void push_back(std::span<const double> x) {
    assert(static_cast<int>(x.size()) == dim_);
    coords_.insert(coords_.end(), x.begin(), x.end());
  }
  void reserve(std::size_t n) { coords_.reserve(n * static_cast<std::size_t>(dim_)); }

  const std::vector<double>& coords() const { return coords_; }
  std::vector<double>& coords() { return coords_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dim_ = 0;
  std::vector<double> coords_;
};

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = a[k] - b[k];
    s += t * t;
  }
  return s;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace rpl
