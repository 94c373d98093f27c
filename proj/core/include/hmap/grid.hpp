// Copyright 2026 The hmap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HMAP_GRID_HPP
#define HMAP_GRID_HPP

#include <cstddef>
#include <vector>

#include "hmap/errors.hpp"

namespace hmap {

/// Uniform angular grid t_j = 2*pi*j/node_count covering [0, 2*pi) once.
/// node_count must be a power of two and at least 16.  On a periodic
/// integrand the uniform trapezoid rule collapses to the plain node average,
/// which is what all quadrature in this library uses.
class CircleGrid {
 public:
  static constexpr std::size_t kDefaultNodes = 4096;

  explicit CircleGrid(std::size_t node_count = kDefaultNodes);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  double node(std::size_t j) const noexcept { return nodes_[j]; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }

  /// Angular spacing 2*pi/node_count.
  double step() const noexcept { return step_; }

  /// Index of the node equal to angle t, or throws NotAGridNode when t is
  /// not a node (tolerance 1e-9 radians, periodic).
  std::size_t index_of(double t) const;

 private:
  std::vector<double> nodes_;
  double step_;
};

}  // namespace hmap

#endif  // HMAP_GRID_HPP
