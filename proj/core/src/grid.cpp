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

#include "hmap/grid.hpp"

#include <cmath>
#include <numbers>

namespace hmap {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

CircleGrid::CircleGrid(std::size_t node_count) {
  if (node_count < 16 || !is_power_of_two(node_count)) {
    throw Error("InvalidGrid",
                "node_count must be a power of two >= 16, got " +
                    std::to_string(node_count));
  }
  nodes_.resize(node_count);
  step_ = kTwoPi / static_cast<double>(node_count);
  for (std::size_t j = 0; j < node_count; ++j) {
    nodes_[j] = step_ * static_cast<double>(j);
  }
}

std::size_t CircleGrid::index_of(double t) const {
  const double n = static_cast<double>(node_count());
  double pos = std::fmod(t / step_, n);
  if (pos < 0) pos += n;
  const double rounded = std::round(pos);
  if (std::fabs(pos - rounded) * step_ > 1e-9) {
    throw Error("NotAGridNode", "angle is not a grid node");
  }
  auto j = static_cast<std::size_t>(rounded);
  return j == node_count() ? 0 : j;
}

}  // namespace hmap
