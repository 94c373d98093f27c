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

#include "hmap/mappings.hpp"

#include <cmath>
#include <numbers>

#include "hmap/errors.hpp"

namespace hmap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInteriorMargin = 1e-9;

void require_interior(Complex z) {
  if (std::abs(z) > 1.0 - kInteriorMargin) {
    throw Error("OutsideDomain", "point must satisfy |z| <= 1 - 1e-9");
  }
}

}  // namespace

Complex poisson_extend(const BoundarySpec& spec, Complex z,
                       const CircleGrid& grid) {
  require_interior(z);
  const auto values = sample_boundary(spec, grid);
  const double one_minus_r2 = 1.0 - std::norm(z);
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < values.size(); ++j) {
    const Complex w = z * std::polar(1.0, -grid.node(j));
    acc += values[j] * (one_minus_r2 / std::norm(1.0 - w));
  }
  return acc / static_cast<double>(values.size());
}

CoeffTable coeff_table(const BoundarySpec& spec, int N, const CircleGrid& grid,
                       std::optional<double> p) {
  const FourierSpectrum spectrum = fourier_coefficients(spec, N, grid);
  CoeffTable table;
  table.a.resize(static_cast<std::size_t>(N) + 1);
  table.b.resize(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    table.a[static_cast<std::size_t>(k)] = spectrum.at(k);
    table.b[static_cast<std::size_t>(k)] =
        k >= 1 ? std::conj(spectrum.at(-k)) : Complex{0.0, 0.0};
  }
  if (p) {
    const double q = conjugate_exponent(*p);
    table.tail_bound_rate = 2.0 * cq_constant(1, q, grid) *
                            lp_norm(spec, *p, grid,
                                    NormConvention::kNormalized);
  }
  return table;
}

CoeffTable extremal_coeffs(int n, double M, Complex alpha, Complex beta,
                           int N) {
  if (n < 1) throw Error("InvalidBound", "extremal n must be positive");
  if (!(M > 0)) throw Error("InvalidBound", "extremal M must be positive");
  if (std::fabs(std::abs(alpha) - 1.0) > 1e-12 ||
      std::fabs(std::abs(beta) - 1.0) > 1e-12) {
    throw Error("InvalidBound", "alpha and beta must be unimodular");
  }
  if (N < n) {
    throw Error("InvalidTruncation",
                "truncation must be at least n to hold the first mode");
  }
  CoeffTable table;
  table.a.assign(static_cast<std::size_t>(N) + 1, Complex{0.0, 0.0});
  table.b.assign(static_cast<std::size_t>(N) + 1, Complex{0.0, 0.0});
  const Complex unit_a = 2.0 * M * alpha / (kPi * Complex{0.0, 1.0});
  const Complex unit_b = 2.0 * M * std::conj(alpha) / (kPi * Complex{0.0, 1.0});
  Complex beta_pow = beta;  // beta^{2k+1}
  for (int k = 0;; ++k) {
    const long long m = static_cast<long long>(n) * (2 * k + 1);
    if (m > N) break;
    const double inv = 1.0 / (2.0 * k + 1.0);
    table.a[static_cast<std::size_t>(m)] = unit_a * beta_pow * inv;
    table.b[static_cast<std::size_t>(m)] = unit_b * beta_pow * inv;
    beta_pow *= beta * beta;
  }
  table.tail_bound_rate = 4.0 * M / kPi;  // 2 C_1 ||F||_inf with ||F||_inf = M
  return table;
}

DerivEval eval_map(const CoeffTable& table, Complex z) {
  require_interior(z);
  const int N = table.truncation();
  // Horner on h(z) = sum a_n z^n, g(z) = sum b_n z^n and their derivatives.
  Complex h{0.0, 0.0}, g{0.0, 0.0}, dh{0.0, 0.0}, dg{0.0, 0.0};
  for (int k = N; k >= 1; --k) {
    const auto idx = static_cast<std::size_t>(k);
    h = h * z + table.a[idx];
    g = g * z + table.b[idx];
    dh = dh * z + static_cast<double>(k) * table.a[idx];
    dg = dg * z + static_cast<double>(k) * table.b[idx];
  }
  h = h * z + table.a[0];
  g = g * z;  // b_0 = 0

  DerivEval out;
  out.f = h + std::conj(g);
  out.fz = dh;
  out.fzbar = std::conj(dg);
  const double mfz = std::abs(out.fz);
  const double mfzbar = std::abs(out.fzbar);
  out.Lambda = mfz + mfzbar;
  out.lambda = std::fabs(mfz - mfzbar);
  out.J = mfz * mfz - mfzbar * mfzbar;
  return out;
}

MajorantValue majorant(const CoeffTable& table, double r) {
  if (!(r >= 0.0) || r >= 1.0) {
    throw Error("DivergenceRisk", "majorant radius must lie in [0, 1)");
  }
  const int N = table.truncation();
  double value = std::abs(table.a[0]);
  double rn = 1.0;
  for (int k = 1; k <= N; ++k) {
    rn *= r;
    const auto idx = static_cast<std::size_t>(k);
    value += (std::abs(table.a[idx]) + std::abs(table.b[idx])) * rn;
  }
  MajorantValue out;
  out.value = value;
  out.tail = table.tail_bound_rate > 0.0
                 ? table.tail_bound_rate * rn * r / (1.0 - r)
                 : 0.0;
  return out;
}

}  // namespace hmap
