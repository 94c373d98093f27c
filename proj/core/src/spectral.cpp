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

#include "hmap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "hmap/errors.hpp"
#include "hmap/quadrature.hpp"

namespace hmap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_exponent(double p, const char* what) {
  if (std::isnan(p) || p < 1.0) {
    throw Error("InvalidExponent",
                std::string(what) + " must satisfy p >= 1 or p = inf");
  }
}

// In-place iterative radix-2 FFT (forward: data_j -> sum_j data_j
// e^{-2 pi i jk/n}).  Grid sizes are powers of two by construction.
// Twiddles come from a polar-exact table, not a multiplicative recurrence.
void fft_forward(std::vector<Complex>& data) {
  const std::size_t n = data.size();
  std::vector<Complex> twiddle(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    twiddle[j] = std::polar(1.0, -kTwoPi * static_cast<double>(j) /
                                     static_cast<double>(n));
  }
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Complex even = data[i + j];
        const Complex odd = data[i + j + len / 2] * twiddle[j * stride];
        data[i + j] = even + odd;
        data[i + j + len / 2] = even - odd;
      }
    }
  }
}

}  // namespace

double lp_norm(const BoundarySpec& spec, double p, const CircleGrid& grid,
               NormConvention convention) {
  require_exponent(p, "lp_norm exponent");
  const auto values = sample_boundary(spec, grid);
  if (std::isinf(p)) {
    double sup = 0.0;
    for (const auto& v : values) sup = std::max(sup, std::abs(v));
    return sup;
  }
  double mean = 0.0;
  for (const auto& v : values) mean += std::pow(std::abs(v), p);
  mean /= static_cast<double>(values.size());
  // mean = (1/2pi) integral |F|^p dt; the plain convention scales the
  // integral back in before taking the 1/p power.
  const double power =
      convention == NormConvention::kPlain ? mean * kTwoPi : mean;
  return std::pow(power, 1.0 / p);
}

FourierSpectrum::FourierSpectrum(int truncation, std::vector<Complex> coeffs)
    : truncation_(truncation), coeffs_(std::move(coeffs)) {
  if (truncation_ < 0 ||
      coeffs_.size() != static_cast<std::size_t>(2 * truncation_ + 1)) {
    throw Error("InvalidTruncation", "spectrum storage does not match N");
  }
}

Complex FourierSpectrum::at(int k) const {
  if (k < -truncation_ || k > truncation_) {
    throw Error("InvalidTruncation",
                "index " + std::to_string(k) + " outside [-N, N]");
  }
  return coeffs_[static_cast<std::size_t>(k + truncation_)];
}

FourierSpectrum fourier_coefficients(const BoundarySpec& spec, int N,
                                     const CircleGrid& grid) {
  if (N < 1) throw Error("InvalidTruncation", "truncation must be positive");
  const auto nodes = static_cast<int>(grid.node_count());
  if (N > nodes / 2 - 1) {
    throw Error("AliasRisk",
                "truncation " + std::to_string(N) + " needs node_count >= " +
                    std::to_string(2 * (N + 1)));
  }
  auto values = sample_boundary(spec, grid);
  fft_forward(values);
  std::vector<Complex> coeffs(2 * N + 1);
  for (int k = -N; k <= N; ++k) {
    const std::size_t bin =
        k >= 0 ? static_cast<std::size_t>(k)
               : static_cast<std::size_t>(nodes + k);
    coeffs[static_cast<std::size_t>(k + N)] =
        values[bin] / static_cast<double>(nodes);
  }
  return FourierSpectrum(N, std::move(coeffs));
}

double cq_value(double q) {
  require_exponent(q, "cq exponent");
  if (std::isinf(q)) return 1.0;  // esssup |cos| handled symbolically
  // (1/2pi) integral_0^{2pi} |cos(nt)|^q dt = (2/pi) integral_0^{pi/2}
  // cos^q u du for every n >= 1.
  const double quarter = tanh_sinh(
      [q](double u) { return std::pow(std::cos(u), q); }, 0.0, kPi / 2.0);
  const double mean = (2.0 / kPi) * quarter;
  return std::pow(mean, 1.0 / q);
}

double cq_constant(int n, double q, const CircleGrid& grid) {
  if (n < 1) throw Error("InvalidBound", "cq_constant requires n >= 1");
  require_exponent(q, "cq exponent");
  if (std::isinf(q)) return 1.0;

  const double value = cq_value(q);

  // n-independence assert: the full-circle node average for this n must
  // match the reduced-period value within the trapezoid error budget.  The
  // grid sees |cos(n t)|^q through the subgrid of size node_count/gcd, and
  // the |.|^q corners cap the decay at O(1/size^2).
  const auto nodes = grid.node_count();
  double mean = 0.0;
  for (std::size_t j = 0; j < nodes; ++j) {
    mean += std::pow(std::fabs(std::cos(n * grid.node(j))), q);
  }
  mean /= static_cast<double>(nodes);
  const auto sub = nodes / std::gcd(static_cast<std::size_t>(n), nodes);
  const double budget =
      20.0 / (static_cast<double>(sub) * static_cast<double>(sub)) + 1e-12;
  const double reduced_mean = std::pow(value, q);
  if (std::fabs(mean - reduced_mean) > budget) {
    throw Error("QuadratureInconsistency",
                "grid quadrature of |cos(nt)|^q disagrees with the "
                "n-independent reduced-period value");
  }
  return value;
}

double conjugate_exponent(double p) {
  require_exponent(p, "exponent");
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

}  // namespace hmap
