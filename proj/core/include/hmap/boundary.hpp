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

#ifndef HMAP_BOUNDARY_HPP
#define HMAP_BOUNDARY_HPP

#include <complex>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hmap/grid.hpp"

namespace hmap {

using Complex = std::complex<double>;

/// F(e^{it}) = scale * e^{i n t};  n may be negative.
struct ExponentialBoundary {
  int n = 1;
  Complex scale{1.0, 0.0};
};

/// F(e^{it}) = sum_k c_k e^{i k t} over a finite index set.
/// std::map keeps iteration order deterministic.
struct TrigPolyBoundary {
  std::map<int, Complex> coeffs;
};

/// The bounded extremal family
///   F(e^{it}) = (2 M alpha / pi) * arg((1 + beta z^n)/(1 - beta z^n)),
///   z = e^{it}, |alpha| = |beta| = 1.
/// Off its 2n jump points the Moebius image of a unimodular point is purely
/// imaginary, so the boundary value is exactly +M alpha or -M alpha.
struct ExtremalBoundary {
  int n = 1;
  double M = 1.0;
  Complex alpha{1.0, 0.0};
  Complex beta{1.0, 0.0};
};

/// Raw samples aligned to a CircleGrid with node_count == values.size().
struct SamplesBoundary {
  std::vector<Complex> values;
};

/// A boundary function on the unit circle: one closed-form family or a
/// sample vector.  Immutable after construction; safe to share across
/// threads.
class BoundarySpec {
 public:
  using Payload = std::variant<ExponentialBoundary, TrigPolyBoundary,
                               ExtremalBoundary, SamplesBoundary>;

  BoundarySpec(ExponentialBoundary b);  // NOLINT(google-explicit-constructor)
  BoundarySpec(TrigPolyBoundary b);     // NOLINT(google-explicit-constructor)
  BoundarySpec(ExtremalBoundary b);     // NOLINT(google-explicit-constructor)
  BoundarySpec(SamplesBoundary b);      // NOLINT(google-explicit-constructor)

  const Payload& payload() const noexcept { return payload_; }

  /// "exponential", "trig_poly", "extremal" or "samples".
  const std::string& kind() const noexcept;

  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&payload_);
  }

 private:
  Payload payload_;
};

/// F(e^{it}).  For the samples kind t must be a grid node of the aligned
/// grid.  For the extremal kind exactly at a jump (beta e^{int} = +-1)
/// throws RemovableSingularity; integrating callers substitute 0, the
/// midpoint of the jump.
Complex evaluate_boundary(const BoundarySpec& spec, double t);

/// All node values in grid order, with the midpoint convention applied at
/// extremal jumps.  Throws GridMismatch when a samples spec does not align
/// with the grid.
std::vector<Complex> sample_boundary(const BoundarySpec& spec,
                                     const CircleGrid& grid);

}  // namespace hmap

#endif  // HMAP_BOUNDARY_HPP
