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

#include "hmap/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace hmap {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
// |t| beyond ~3.8 maps to within one ulp of the interval ends.
constexpr double kTMax = 3.8;
}  // namespace

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_level) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  // x(t) = tanh(pi/2 sinh t), w(t) = (pi/2) cosh t / cosh^2(pi/2 sinh t).
  auto node = [&](double t, double& x, double& w) {
    const double s = kHalfPi * std::sinh(t);
    x = std::tanh(s);
    const double c = std::cosh(s);
    w = kHalfPi * std::cosh(t) / (c * c);
  };

  auto eval = [&](double x) {
    // Map to [a, b]; clamp keeps the argument inside the interval when
    // tanh saturates to +-1 in the last bits.
    double u = center + half * x;
    if (u <= a) u = std::nextafter(a, b);
    if (u >= b) u = std::nextafter(b, a);
    return f(u);
  };

  double h = 1.0;
  double x, w;
  node(0.0, x, w);
  double sum = w * eval(x);
  for (int j = 1; h * j <= kTMax; ++j) {
    node(h * j, x, w);
    sum += w * (eval(x) + eval(-x));
  }
  double prev = sum * h * half;

  double integral = prev;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    // Previous nodes sit at even multiples of the refined step; add the odd
    // ones.
    double partial = 0.0;
    for (int j = 1; h * j <= kTMax; j += 2) {
      node(h * j, x, w);
      partial += w * (eval(x) + eval(-x));
    }
    sum += partial;
    integral = sum * h * half;
    if (level >= 3 &&
        std::fabs(integral - prev) <= rel_tol * std::fabs(integral)) {
      break;
    }
    prev = integral;
  }
  return integral;
}

}  // namespace hmap
