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

#ifndef HMAP_RADII_HPP
#define HMAP_RADII_HPP

#include <optional>
#include <string>
#include <vector>

#include "hmap/mappings.hpp"

namespace hmap {

/// Class parameters feeding the radius formulas.  Unused fields stay unset.
struct ClassParams {
  std::optional<double> p;             // boundary exponent, may be infinity
  std::optional<double> q;             // conjugate exponent
  std::optional<double> norm;          // ||F||_p
  std::optional<double> M;             // sup bound of the bounded class
  std::optional<double> a;             // |a_0| = a*M, a in [0,1]
  std::optional<double> Lambda_bound;  // Lipschitz bound on Lambda_f
};

enum class RadiusMethod { kClosedForm, kBisection, kSampled };

/// A named radius constant with the residual of its defining equation and a
/// snapshot of the parameters it was computed from.  Closed-form reports
/// keep the residual below 1e-10 by construction; flags record degenerate
/// regimes (ConstantMap, VacuousClass, EmptySchlichtDisk, BoundNotAttained)
/// instead of refusing to answer.
struct RadiusReport {
  std::string name;
  double value = 0.0;
  RadiusMethod method = RadiusMethod::kClosedForm;
  double residual = 0.0;
  ClassParams params;
  std::vector<std::string> flags;
};

/// Bohr radius of the bounded class with fixed |a_0| = a*M:
///   r_H(a) = (1 - a)/(1 - a + 4/pi).
/// Residual checks a + (4/pi) r/(1-r) = 1 at the returned r (M cancels).
RadiusReport bohr_bounded(double a);

/// Bohr radius of the L^p boundary class:  r_p = 1/(2 C_q + 1) with q
/// conjugate to p.  Residual checks 2 C_q r/(1-r) = 1.
RadiusReport bohr_lp(double p);

struct LandauLpResult {
  RadiusReport r0;  // univalence radius
  RadiusReport R0;  // schlicht-disk radius
};

/// Univalence and schlicht-disk radii for the normalized class
/// (f(0) = f_z(0) - 1 = f_zbar(0) = 0) with ||F||_p = norm.  With
/// K = 2 C_q norm:
///   r0 = 1 - sqrt(K^2 + K)/(K + 1),  the smaller root of
///        (K+1) r^2 - 2 (K+1) r + 1 = 0,
///   R0 = r0 - K r0^2/(1 - r0).
/// Computed for every norm > 0; K < 1 attaches the VacuousClass flag
/// (|a_1| = 1 forces K >= 1) and R0 <= 0 would attach EmptySchlichtDisk,
/// rather than refusing.  The r0 residual is the quadratic's value at r0.
LandauLpResult landau_lp(double p, double norm);

struct LandauClassicalResult {
  RadiusReport r0;
  RadiusReport sigma0;
};

/// Classical Landau constants for analytic f with f(0) = f'(0) - 1 = 0 and
/// |f| < M:  r0 = 1/(M + sqrt(M^2 - 1)),  sigma0 = M r0^2.
/// Throws InvalidBound for M < 1.
LandauClassicalResult landau_classical(double M);

struct LandauBoundedResult {
  RadiusReport rho1;
  RadiusReport R1;
};

/// Landau-type constants for harmonic f with f(0) = 0, J_f(0) = 1,
/// |f| < M:
///   rho1 = 1 - 2 sqrt(2) M / sqrt(pi + 8 M^2),
///   R1   = pi/(4M) + 4M - 4M sqrt(1 + pi/(8 M^2)).
LandauBoundedResult landau_grigoryan_bounded(double M);

struct LandauLipschitzResult {
  RadiusReport rho2;
  RadiusReport R2;
};

/// Landau-type constants for harmonic f with f(0) = 0, lambda_f(0) = 1 and
/// Lambda_f < Lambda:  rho2 = 1/(1 + Lambda),
/// R2 = 1 - Lambda ln(1 + 1/Lambda).  Throws InvalidBound for Lambda < 1
/// (lambda_f(0) = 1 forces Lambda >= 1).
LandauLipschitzResult landau_grigoryan_lipschitz(double Lambda);

/// Largest r (within tol) with majorant value + tail <= bound, by bisection
/// on [0, 1): the majorant is nondecreasing in r.  A table that never
/// exceeds the bound returns 1 - tol flagged ConstantMap (constant table)
/// or BoundNotAttained (finite table whose full sum stays below bound).
/// Throws NoRadius when bound < |a_0| and InvalidTolerance for
/// tol < 1e-12.
RadiusReport empirical_bohr(const CoeffTable& table, double bound, double tol);

/// Normalized excess of the class-worst majorant over the bound M:
///   (a + (4/pi) r/(1-r)) - 1.
/// Positive exactly when r exceeds the Bohr radius r_H(a).
double sharpness_margin(double a, double r);

}  // namespace hmap

#endif  // HMAP_RADII_HPP
