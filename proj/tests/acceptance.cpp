// Acceptance suite: one check per release criterion, one PASS/FAIL line
// each, nonzero exit when anything fails.  Tolerances are fixed here, not
// configurable, so a green run certifies the build.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "hmap/radii.hpp"
#include "hmap/serialize.hpp"
#include "hmap/verify.hpp"
#include "oracles.hpp"

using namespace hmap;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

int failures = 0;

void report(int number, const std::string& label, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number,
              label.c_str(), detail.c_str());
  if (!pass) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3g", v);
  return buffer;
}

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const RadiusReport report_h = bohr_bounded(0.0);
  const double elapsed = ms_since(start);
  const double err = std::fabs(report_h.value - kPi / (kPi + 4.0));
  report(1, "Bohr radius of the bounded class is pi/(pi+4)",
         err <= 1e-12 && elapsed < 1.0,
         "err " + fmt(err) + ", " + fmt(elapsed) + " ms");
}

void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  const CircleGrid grid;
  bool ok = true;
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const double err = std::fabs(cq_constant(n, 1.0, grid) - 2.0 / kPi);
    worst = std::max(worst, err);
    ok = ok && err <= 1e-8;
    ok = ok && cq_constant(n, kInf, grid) == 1.0;
  }
  const double err2 = std::fabs(cq_constant(1, 2.0, grid) - std::sqrt(0.5));
  ok = ok && err2 <= 1e-10;
  const double elapsed = ms_since(start);
  ok = ok && elapsed < 100.0;
  report(2, "C_q values at q = 1, 2, inf",
         ok, "worst err " + fmt(std::max(worst, err2)) + ", " + fmt(elapsed) +
                 " ms");
}

void criterion_3() {
  const double gap = std::fabs(bohr_lp(kInf).value - bohr_bounded(0.0).value);
  const double gap1 = std::fabs(bohr_lp(1.0).value - 1.0 / 3.0);
  double worst_residual = 0.0;
  for (double p : {1.0, 1.5, 2.0, 4.0, kInf}) {
    worst_residual = std::max(worst_residual, bohr_lp(p).residual);
  }
  report(3, "L^p Bohr radius endpoints and defining-equation residuals",
         gap <= 1e-12 && gap1 <= 1e-12 && worst_residual <= 1e-10,
         "gap_inf " + fmt(gap) + ", gap_1 " + fmt(gap1) + ", residual " +
             fmt(worst_residual));
}

void criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  const CoeffTable closed = extremal_coeffs(1, 1.0, {1, 0}, {1, 0}, 5);
  const double pair_closed = std::abs(closed.a[1]) + std::abs(closed.b[1]);
  const double err_closed = std::fabs(pair_closed - 4.0 / kPi);

  const CircleGrid grid;
  const BoundarySpec spec{ExtremalBoundary{1, 1.0, {1, 0}, {1, 0}}};
  const CoeffTable quad = coeff_table(spec, 5, grid);
  const double pair_quad = std::abs(quad.a[1]) + std::abs(quad.b[1]);
  const double err_quad = std::fabs(pair_quad - 4.0 / kPi);

  const double elapsed = ms_since(start);
  report(4, "extremal attainment of |a_1| + |b_1| = 4/pi",
         err_closed <= 1e-12 && err_quad <= 2e-3 && elapsed < 1000.0,
         "closed " + fmt(err_closed) + ", quadrature " + fmt(err_quad) +
             ", " + fmt(elapsed) + " ms");
}

void criterion_5() {
  const CoeffTable table = extremal_coeffs(1, 1.0, {1, 0}, {1, 0}, 401);
  bool ok = true;
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double r = 0.1 * i;
    const MajorantValue m = majorant(table, r);
    const double gap =
        std::fabs(m.value - oracles::extremal_majorant(1.0, 1, r));
    worst = std::max(worst, gap - m.tail);
    ok = ok && gap <= m.tail + 1e-12;  // 1e-12 covers accumulation round-off
  }
  const RadiusReport inverse = empirical_bohr(table, 1.0, 1e-12);
  const double err = std::fabs(inverse.value - std::tanh(kPi / 4.0));
  ok = ok && err <= 1e-9;
  report(5, "extremal majorant vs (4M/pi) artanh(r^n) and its inversion",
         ok, "worst excess " + fmt(worst) + ", bisection err " + fmt(err));
}

void criterion_6() {
  const double rH = kPi / (kPi + 4.0);
  const bool bracket = sharpness_margin(0.0, rH - 1e-6) < 0.0 &&
                       sharpness_margin(0.0, rH + 1e-6) > 0.0;
  const bool above = sharpness_margin(0.0, 0.44) > 0.0;
  report(6, "sharpness margin changes sign exactly at pi/(pi+4)",
         bracket && above,
         std::string("bracket ") + (bracket ? "ok" : "bad") + ", margin(0.44) " +
             fmt(sharpness_margin(0.0, 0.44)));
}

void criterion_7() {
  const double c1 = cq_value(1.0);
  bool ok = true;
  double worst_residual = 0.0;
  for (double K : {1.0, 2.0, 5.0}) {
    const LandauLpResult result = landau_lp(kInf, K / (2.0 * c1));
    worst_residual = std::max(worst_residual, result.r0.residual);
    ok = ok && result.r0.residual <= 1e-12;
    const double r = result.r0.value;
    ok = ok &&
         std::fabs(result.R0.value - (r - K * r * r / (1.0 - r))) <= 1e-14;
  }
  // K = 1 against the independent bisection oracle.
  const double oracle_r0 = oracles::bisect_le(
      [](double x) { return -(2.0 * x * x - 4.0 * x + 1.0); }, 0.0, 0.999);
  const LandauLpResult at1 = landau_lp(kInf, 1.0 / (2.0 * c1));
  const double err_r0 = std::fabs(at1.r0.value - oracle_r0);
  const double err_R0 = std::fabs(at1.R0.value - 0.17157287525380990);
  ok = ok && err_r0 <= 1e-10 && err_R0 <= 1e-10;
  report(7, "Landau L^p radii satisfy the proof quadratic",
         ok, "residual " + fmt(worst_residual) + ", r0 err " + fmt(err_r0) +
                 ", R0 err " + fmt(err_R0));
}

void criterion_8() {
  const LandauClassicalResult classical = landau_classical(1.0);
  const LandauLipschitzResult lipschitz = landau_grigoryan_lipschitz(1.0);
  const bool ok = classical.r0.value == 1.0 && classical.sigma0.value == 1.0 &&
                  std::fabs(lipschitz.rho2.value - 0.5) <= 1e-12 &&
                  std::fabs(lipschitz.R2.value - (1.0 - std::log(2.0))) <=
                      1e-12;
  report(8, "background Landau constants at the degenerate parameters",
         ok, "r0 " + fmt(classical.r0.value) + ", R2 err " +
                 fmt(std::fabs(lipschitz.R2.value - 0.30685281944005471)));
}

void criteria_9_and_10() {
  VerifyConfig cfg;
  cfg.seed = 42;
  cfg.trials = 100;
  cfg.p_grid = {1.0, 1.5, 2.0, 4.0, kInf};
  cfg.max_degree = 16;
  cfg.N = 64;
  cfg.tolerance = 1e-9;

  const auto start = std::chrono::steady_clock::now();
  const std::vector<Verdict> verdicts = run_default_suite(cfg);
  const double elapsed = ms_since(start);

  auto find = [&](const std::string& name) -> const Verdict& {
    for (const auto& v : verdicts) {
      if (v.property_name == name) return v;
    }
    static Verdict missing;
    missing.fail_count = 1;
    return missing;
  };

  const bool inequality_checks = find("coeff_bound_single").fail_count == 0 &&
                              find("coeff_bound_pair").fail_count == 0 &&
                              find("bohr_majorant").fail_count == 0 &&
                              find("schwarz_growth").fail_count == 0;
  report(9, "property suite: zero violations across 100 seeded trials",
         inequality_checks && elapsed < 60000.0,
         "pair margin " + fmt(find("coeff_bound_pair").worst_margin) + ", " +
             fmt(elapsed / 1000.0) + " s");

  const Verdict& univalence = find("univalence_jacobian");
  const Verdict& schlicht = find("schlicht_disk");
  const bool ok10 = univalence.fail_count == 0 &&
                    univalence.worst_margin > 0.0 &&
                    schlicht.fail_count == 0 &&
                    schlicht.worst_margin >= -1e-6;
  report(10, "univalence and schlicht sampling at K = 1 over 20 draws",
         ok10, "min Jacobian " + fmt(univalence.worst_margin) +
                   ", schlicht margin " + fmt(schlicht.worst_margin));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criteria_9_and_10();
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
