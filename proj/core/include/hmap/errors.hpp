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

#ifndef HMAP_ERRORS_HPP
#define HMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hmap {

/// Domain error carrying a stable machine-readable name next to the
/// human-readable message.  The CLI maps these to exit status 1 and prints
/// the name, so names are part of the public interface:
///   InvalidExponent, AliasRisk, OutsideDomain, DivergenceRisk, NoRadius,
///   InvalidBound, RemovableSingularity, InvalidGrid, GridMismatch,
///   NotAGridNode, InvalidTruncation, InvalidTolerance, InvalidDegree,
///   QuadratureInconsistency.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Signalled by evaluate_boundary when the extremal family is sampled exactly
/// at a jump of its boundary values.  Callers that integrate over the circle
/// catch it and substitute 0, the midpoint of the jump.
class RemovableSingularity : public Error {
 public:
  explicit RemovableSingularity(const std::string& message)
      : Error("RemovableSingularity", message) {}
};

}  // namespace hmap

#endif  // HMAP_ERRORS_HPP
