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

#ifndef HMAP_MAPPINGS_HPP
#define HMAP_MAPPINGS_HPP

#include <complex>
#include <optional>
#include <vector>

#include "hmap/boundary.hpp"
#include "hmap/grid.hpp"
#include "hmap/spectral.hpp"

namespace hmap {

/// Truncated coefficient table of a harmonic map
///
///     f(z) = sum_{n=0}^{N} a_n z^n + conj( sum_{n=1}^{N} b_n z^n ).
///
/// tail_bound_rate is the constant 2 C_q ||F||_p that dominates every
/// |a_n| + |b_n|; it turns truncation into the rigorous geometric tail
/// rate * r^{N+1}/(1-r).  Zero means "unknown, report no tail".
struct CoeffTable {
  std::vector<Complex> a;  // indices 0..N
  std::vector<Complex> b;  // indices 0..N, b[0] fixed to 0
  double tail_bound_rate = 0.0;

  int truncation() const noexcept { return static_cast<int>(a.size()) - 1; }
};

/// Pointwise evaluation bundle: the map value, both Wirtinger derivatives,
/// and the directional-derivative extremes
///   Lambda = |f_z| + |f_zbar|,  lambda = ||f_z| - |f_zbar||,
///   J = |f_z|^2 - |f_zbar|^2  (Jacobian; J > 0 means sense-preserving).
struct DerivEval {
  Complex f;
  Complex fz;
  Complex fzbar;
  double Lambda = 0.0;
  double lambda = 0.0;
  double J = 0.0;
};

/// Majorant section value M_f(r) = |a_0| + sum (|a_n| + |b_n|) r^n together
/// with the geometric bound on the truncated tail.  The true majorant lies
/// in [value, value + tail].
struct MajorantValue {
  double value = 0.0;
  double tail = 0.0;
};

/// Harmonic extension by Poisson-kernel quadrature on the grid:
///   (1/2pi) integral P(z e^{-it}) F(e^{it}) dt,
///   P(w) = (1 - |w|^2)/|1 - w|^2.
/// Throws OutsideDomain unless |z| <= 1 - 1e-9.
Complex poisson_extend(const BoundarySpec& spec, Complex z,
                       const CircleGrid& grid);

/// Coefficient table from the grid DFT: a_n = c_n for n >= 0 and
/// b_n = conj(c_{-n}) for n >= 1.  When p is supplied the tail rate is set
/// to 2 C_q ||F||_p with q conjugate to p and the norm taken in the
/// normalized convention (see NormConvention), which is the convention
/// under which the coefficient bound is sharp.
CoeffTable coeff_table(const BoundarySpec& spec, int N, const CircleGrid& grid,
                       std::optional<double> p = std::nullopt);

/// Exact closed-form table of the extremal family
///   f(z) = (2 M alpha / pi) arg((1 + beta z^n)/(1 - beta z^n)).
/// Expanding 2 artanh(beta z^n) gives nonzero entries only at the odd
/// multiples m = n(2k+1) <= N:
///   a_m = (2 M alpha /(pi i)) beta^{2k+1}/(2k+1),
///   b_m = (2 M conj(alpha)/(pi i)) beta^{2k+1}/(2k+1),
/// so |a_m| + |b_m| = 4M/(pi (2k+1)).  The tail rate is the p = infinity
/// bound 4M/pi.  Requires N >= n and |alpha| = |beta| = 1 within 1e-12.
CoeffTable extremal_coeffs(int n, double M, Complex alpha, Complex beta,
                           int N);

/// Evaluate the truncated series and its Wirtinger derivatives at z.
/// Derivatives come from term-wise differentiation of the table, never from
/// finite differences.  Throws OutsideDomain unless |z| <= 1 - 1e-9.
DerivEval eval_map(const CoeffTable& table, Complex z);

/// M_f(r) truncated at the table order plus its rigorous tail bound.
/// Throws DivergenceRisk for r >= 1.
MajorantValue majorant(const CoeffTable& table, double r);

}  // namespace hmap

#endif  // HMAP_MAPPINGS_HPP
