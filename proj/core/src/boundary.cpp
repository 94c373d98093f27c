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

#include "hmap/boundary.hpp"

#include <cmath>
#include <numbers>

#include "hmap/errors.hpp"

namespace hmap {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unimodular(Complex v, const char* which) {
  if (std::fabs(std::abs(v) - 1.0) > 1e-12) {
    throw Error("InvalidBound",
                std::string(which) + " of the extremal family must be "
                                     "unimodular within 1e-12");
  }
}

const std::string kKindNames[] = {"exponential", "trig_poly", "extremal",
                                  "samples"};

}  // namespace

BoundarySpec::BoundarySpec(ExponentialBoundary b) : payload_(std::move(b)) {}

BoundarySpec::BoundarySpec(TrigPolyBoundary b) : payload_(std::move(b)) {}

BoundarySpec::BoundarySpec(ExtremalBoundary b) : payload_(std::move(b)) {
  const auto& e = std::get<ExtremalBoundary>(payload_);
  if (e.n < 1) throw Error("InvalidBound", "extremal n must be positive");
  if (!(e.M > 0)) throw Error("InvalidBound", "extremal M must be positive");
  require_unimodular(e.alpha, "alpha");
  require_unimodular(e.beta, "beta");
}

BoundarySpec::BoundarySpec(SamplesBoundary b) : payload_(std::move(b)) {}

const std::string& BoundarySpec::kind() const noexcept {
  return kKindNames[payload_.index()];
}

Complex evaluate_boundary(const BoundarySpec& spec, double t) {
  if (!std::isfinite(t)) throw Error("InvalidBound", "angle must be finite");

  if (const auto* e = spec.get_if<ExponentialBoundary>()) {
    return e->scale * std::polar(1.0, e->n * t);
  }
  if (const auto* tp = spec.get_if<TrigPolyBoundary>()) {
    Complex sum{0.0, 0.0};
    for (const auto& [k, c] : tp->coeffs) sum += c * std::polar(1.0, k * t);
    return sum;
  }
  if (const auto* ex = spec.get_if<ExtremalBoundary>()) {
    // w = beta e^{int} is unimodular, so (1+w)/(1-w) = i cot(phi/2) with
    // phi = arg w: purely imaginary off the jumps, arg = +-pi/2.
    const Complex w = ex->beta * std::polar(1.0, ex->n * t);
    if (std::abs(1.0 - w) < 1e-12 || std::abs(1.0 + w) < 1e-12) {
      throw RemovableSingularity("extremal boundary sampled at a jump point");
    }
    const double angle = std::arg((1.0 + w) / (1.0 - w));
    return (2.0 * ex->M / kPi) * angle * ex->alpha;
  }
  const auto* s = spec.get_if<SamplesBoundary>();
  CircleGrid grid(s->values.size());  // validates the sample count
  return s->values[grid.index_of(t)];
}

namespace {

// c e^{ikt_j} accumulated over all nodes with the rotation recurrence,
// re-anchored to an exact polar every 128 steps to stop drift.
void accumulate_mode(std::vector<Complex>& out, int k, Complex c,
                     const CircleGrid& grid) {
  const std::size_t n = out.size();
  Complex phase{1.0, 0.0};
  const Complex step = std::polar(1.0, k * grid.step());
  for (std::size_t j = 0; j < n; ++j) {
    if ((j & 127u) == 0) phase = std::polar(1.0, k * grid.node(j));
    out[j] += c * phase;
    phase *= step;
  }
}

}  // namespace

std::vector<Complex> sample_boundary(const BoundarySpec& spec,
                                     const CircleGrid& grid) {
  if (const auto* s = spec.get_if<SamplesBoundary>()) {
    if (s->values.size() != grid.node_count()) {
      throw Error("GridMismatch",
                  "samples boundary holds " + std::to_string(s->values.size()) +
                      " values but the grid has " +
                      std::to_string(grid.node_count()) + " nodes");
    }
    return s->values;
  }
  std::vector<Complex> out(grid.node_count(), Complex{0.0, 0.0});
  if (const auto* e = spec.get_if<ExponentialBoundary>()) {
    accumulate_mode(out, e->n, e->scale, grid);
    return out;
  }
  if (const auto* tp = spec.get_if<TrigPolyBoundary>()) {
    for (const auto& [k, c] : tp->coeffs) accumulate_mode(out, k, c, grid);
    return out;
  }
  for (std::size_t j = 0; j < grid.node_count(); ++j) {
    try {
      out[j] = evaluate_boundary(spec, grid.node(j));
    } catch (const RemovableSingularity&) {
      out[j] = Complex{0.0, 0.0};  // midpoint of the jump
    }
  }
  return out;
}

}  // namespace hmap
