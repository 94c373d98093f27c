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

#ifndef HMAP_QUADRATURE_HPP
#define HMAP_QUADRATURE_HPP

#include <functional>

namespace hmap {

/// Tanh-sinh (double-exponential) quadrature of f over [a, b].
/// Node doubling stops once two consecutive levels agree to rel_tol or
/// max_level is reached.  Robust against algebraic endpoint singularities
/// such as (b - x)^q, which is exactly what |cos|^q reduces to.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-14, int max_level = 11);

}  // namespace hmap

#endif  // HMAP_QUADRATURE_HPP
