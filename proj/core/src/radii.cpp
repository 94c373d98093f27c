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

#include "hmap/radii.hpp"

#include <cmath>
#include <numbers>

#include "hmap/errors.hpp"
#include "hmap/spectral.hpp"

namespace hmap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourOverPi = 4.0 / std::numbers::pi;

}  // namespace

double sharpness_margin(double a, double r) {
  if (a < 0.0 || a > 1.0) throw Error("InvalidBound", "a must lie in [0, 1]");
  if (r < 0.0 || r >= 1.0) {
    throw Error("DivergenceRisk", "r must lie in [0, 1)");
  }
  return a + kFourOverPi * r / (1.0 - r) - 1.0;
}

RadiusReport bohr_bounded(double a) {
  if (a < 0.0 || a > 1.0) throw Error("InvalidBound", "a must lie in [0, 1]");
  RadiusReport report;
  report.name = "r_H";
  report.method = RadiusMethod::kClosedForm;
  report.value = (1.0 - a) / (1.0 - a + kFourOverPi);
  // Defining equation a M + (4M/pi) r/(1-r) = M at r_H; M cancels.
  report.residual = a == 1.0
                        ? 0.0
                        : std::fabs(sharpness_margin(a, report.value));
  report.params.a = a;
  return report;
}

RadiusReport bohr_lp(double p) {
  const double q = conjugate_exponent(p);
  const double cq = cq_value(q);
  RadiusReport report;
  report.name = "r_p";
  report.method = RadiusMethod::kClosedForm;
  report.value = 1.0 / (2.0 * cq + 1.0);
  report.residual =
      std::fabs(2.0 * cq * report.value / (1.0 - report.value) - 1.0);
  report.params.p = p;
  report.params.q = q;
  return report;
}

LandauLpResult landau_lp(double p, double norm) {
  if (!(norm > 0.0)) {
    throw Error("InvalidBound", "landau_lp requires norm > 0");
  }
  const double q = conjugate_exponent(p);
  const double cq = cq_value(q);
  const double K = 2.0 * cq * norm;

  LandauLpResult out;
  out.r0.name = "r_0";
  out.r0.method = RadiusMethod::kClosedForm;
  out.r0.value = 1.0 - std::sqrt(K * K + K) / (K + 1.0);
  // The univalence proof's quadratic, whose smaller root is r0.
  const double r = out.r0.value;
  out.r0.residual = std::fabs((K + 1.0) * r * r - 2.0 * (K + 1.0) * r + 1.0);
  out.r0.params.p = p;
  out.r0.params.q = q;
  out.r0.params.norm = norm;
  if (K < 1.0) {
    // |a_1| + |b_1| = 1 <= K is required for the normalized class to admit
    // any member at all.
    out.r0.flags.push_back("VacuousClass");
  }

  out.R0.name = "R_0";
  out.R0.method = RadiusMethod::kClosedForm;
  out.R0.value = r - K * r * r / (1.0 - r);
  out.R0.residual = std::fabs(out.R0.value - r / (2.0 - r));
  out.R0.params = out.r0.params;
  out.R0.flags = out.r0.flags;
  if (out.R0.value <= 0.0) out.R0.flags.push_back("EmptySchlichtDisk");
  return out;
}

LandauClassicalResult landau_classical(double M) {
  if (M < 1.0) {
    throw Error("InvalidBound",
                "the bounded analytic class requires M >= 1");
  }
  LandauClassicalResult out;
  out.r0.name = "r_0_classical";
  out.r0.method = RadiusMethod::kClosedForm;
  out.r0.value = 1.0 / (M + std::sqrt(M * M - 1.0));
  out.r0.residual =
      std::fabs(out.r0.value * (M + std::sqrt(M * M - 1.0)) - 1.0);
  out.r0.params.M = M;

  out.sigma0.name = "sigma_0";
  out.sigma0.method = RadiusMethod::kClosedForm;
  out.sigma0.value = M * out.r0.value * out.r0.value;
  // r0 is also the root < 1 of z^2 - 2 M z + 1 (where the extremal
  // M z (1 - M z)/(M - z) has vanishing derivative).
  const double r = out.r0.value;
  out.sigma0.residual = std::fabs(r * r - 2.0 * M * r + 1.0);
  out.sigma0.params.M = M;
  return out;
}

LandauBoundedResult landau_grigoryan_bounded(double M) {
  if (!(M > 0.0)) throw Error("InvalidBound", "M must be positive");
  LandauBoundedResult out;
  out.rho1.name = "rho_1";
  out.rho1.method = RadiusMethod::kClosedForm;
  out.rho1.value = 1.0 - 2.0 * std::sqrt(2.0) * M / std::sqrt(kPi + 8.0 * M * M);
  {
    const double c = 1.0 - out.rho1.value;
    out.rho1.residual = std::fabs(c * c * (kPi + 8.0 * M * M) - 8.0 * M * M);
  }
  out.rho1.params.M = M;

  out.R1.name = "R_1";
  out.R1.method = RadiusMethod::kClosedForm;
  out.R1.value = kPi / (4.0 * M) + 4.0 * M -
                 4.0 * M * std::sqrt(1.0 + kPi / (8.0 * M * M));
  {
    const double lhs = kPi / (4.0 * M) + 4.0 * M - out.R1.value;
    out.R1.residual = std::fabs(lhs * lhs - 16.0 * M * M - 2.0 * kPi);
  }
  out.R1.params.M = M;
  return out;
}

LandauLipschitzResult landau_grigoryan_lipschitz(double Lambda) {
  if (Lambda < 1.0) {
    throw Error("InvalidBound", "lambda_f(0) = 1 forces Lambda >= 1");
  }
  LandauLipschitzResult out;
  out.rho2.name = "rho_2";
  out.rho2.method = RadiusMethod::kClosedForm;
  out.rho2.value = 1.0 / (1.0 + Lambda);
  out.rho2.residual = std::fabs((1.0 + Lambda) * out.rho2.value - 1.0);
  out.rho2.params.Lambda_bound = Lambda;

  out.R2.name = "R_2";
  out.R2.method = RadiusMethod::kClosedForm;
  out.R2.value = 1.0 - Lambda * std::log1p(1.0 / Lambda);
  // Same identity through the exponential: Lambda (e^{(1-R2)/Lambda} - 1) = 1.
  out.R2.residual = std::fabs(
      Lambda * std::expm1((1.0 - out.R2.value) / Lambda) - 1.0);
  out.R2.params.Lambda_bound = Lambda;
  return out;
}

RadiusReport empirical_bohr(const CoeffTable& table, double bound, double tol) {
  if (tol < 1e-12) {
    throw Error("InvalidTolerance", "bisection tolerance must be >= 1e-12");
  }
  if (!(bound > 0.0) || bound < std::abs(table.a[0])) {
    throw Error("NoRadius", "bound is below the majorant at r = 0");
  }

  RadiusReport report;
  report.name = "empirical_bohr";
  report.method = RadiusMethod::kBisection;

  auto exceeds = [&](double r) {
    const MajorantValue m = majorant(table, r);
    return m.value + m.tail > bound;
  };

  const double top = 1.0 - tol;
  if (!exceeds(top)) {
    // The majorant never reaches the bound on [0, 1); the supremum is the
    // open endpoint.  Distinguish the genuinely constant table.
    bool constant = table.tail_bound_rate == 0.0;
    for (std::size_t k = 1; constant && k < table.a.size(); ++k) {
      constant = table.a[k] == Complex{0.0, 0.0} &&
                 table.b[k] == Complex{0.0, 0.0};
    }
    report.value = top;
    report.flags.push_back(constant ? "ConstantMap" : "BoundNotAttained");
    const MajorantValue m = majorant(table, top);
    report.residual = std::fabs(bound - m.value - m.tail);
    return report;
  }

  double lo = 0.0, hi = top;
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (exceeds(mid) ? hi : lo) = mid;
  }
  report.value = lo;
  const MajorantValue m = majorant(table, lo);
  report.residual = std::fabs(bound - m.value - m.tail);
  return report;
}

}  // namespace hmap
