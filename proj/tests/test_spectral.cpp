#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "hmap/spectral.hpp"
#include "hmap/verify.hpp"
#include "oracles.hpp"

using namespace hmap;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const CircleGrid kGrid;  // 4096 nodes
}  // namespace

TEST_CASE("circle grid validates node counts") {
  CHECK(CircleGrid(16).node_count() == 16);
  CHECK(CircleGrid().node_count() == 4096);
  CHECK(CircleGrid(64).node(0) == 0.0);
  CHECK(CircleGrid(64).node(16) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK_THROWS_AS(CircleGrid(0), Error);
  CHECK_THROWS_AS(CircleGrid(8), Error);
  CHECK_THROWS_AS(CircleGrid(100), Error);
}

TEST_CASE("evaluate_boundary closed forms") {
  const BoundarySpec rotation{ExponentialBoundary{1, {1.0, 0.0}}};
  const Complex at_quarter = evaluate_boundary(rotation, kPi / 2);
  CHECK(std::abs(at_quarter - Complex{0.0, 1.0}) < 1e-15);

  const BoundarySpec constant{TrigPolyBoundary{{{0, {3.0, 0.0}}}}};
  CHECK(std::abs(evaluate_boundary(constant, 1.234) - Complex{3.0, 0.0}) <
        1e-15);

  // arg((1+i)/(1-i)) = pi/2, so the extremal value at t = pi/2 is +M alpha.
  const BoundarySpec extremal{ExtremalBoundary{1, 1.0, {1, 0}, {1, 0}}};
  CHECK(std::abs(evaluate_boundary(extremal, kPi / 2) - Complex{1.0, 0.0}) <
        1e-14);
  CHECK(std::abs(evaluate_boundary(extremal, 3 * kPi / 2) + Complex{1.0, 0.0}) <
        1e-14);

  CHECK_THROWS_AS(evaluate_boundary(extremal, 0.0), RemovableSingularity);
  CHECK_THROWS_AS(evaluate_boundary(extremal, kPi), RemovableSingularity);
}

TEST_CASE("sample_boundary applies the midpoint convention at jumps") {
  const BoundarySpec extremal{ExtremalBoundary{1, 2.5, {1, 0}, {1, 0}}};
  const auto values = sample_boundary(extremal, kGrid);
  CHECK(values[0] == Complex{0.0, 0.0});
  CHECK(values[2048] == Complex{0.0, 0.0});
  CHECK(std::abs(values[1024] - Complex{2.5, 0.0}) < 1e-13);
}

TEST_CASE("samples kind is pinned to its grid") {
  std::vector<Complex> data(64, Complex{1.0, 0.0});
  const BoundarySpec samples{SamplesBoundary{data}};
  CHECK(std::abs(evaluate_boundary(samples, 2 * kPi * 3 / 64) -
                 Complex{1.0, 0.0}) < 1e-15);
  CHECK_THROWS_AS(evaluate_boundary(samples, 0.1), Error);
  CHECK_THROWS_AS(sample_boundary(samples, kGrid), Error);  // 64 != 4096
}

TEST_CASE("lp_norm matches the plain-integral convention") {
  const BoundarySpec one{TrigPolyBoundary{{{0, {1.0, 0.0}}}}};
  CHECK(lp_norm(one, 2.0, kGrid) ==
        doctest::Approx(2.5066282746310002).epsilon(1e-12));
  CHECK(lp_norm(one, kInf, kGrid) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lp_norm(one, 2.0, kGrid, NormConvention::kNormalized) ==
        doctest::Approx(1.0).epsilon(1e-14));

  const BoundarySpec rotation{ExponentialBoundary{1, {1.0, 0.0}}};
  CHECK(lp_norm(rotation, 4.0, kGrid) ==
        doctest::Approx(1.5832334870861595).epsilon(1e-12));

  CHECK_THROWS_AS(lp_norm(one, 0.5, kGrid), Error);
  CHECK_THROWS_AS(lp_norm(one, std::nan(""), kGrid), Error);
}

TEST_CASE("lp_norm at p=2 agrees with Parseval on random trig polynomials") {
  TrialRng rng(7, 0);
  for (int trial = 0; trial < 25; ++trial) {
    const int degree = rng.uniform_int(1, 20);
    TrigPolyBoundary poly;
    double sum_sq = 0.0;
    for (int k = -degree; k <= degree; ++k) {
      const Complex c = rng.complex_gaussian();
      poly.coeffs[k] = c;
      sum_sq += std::norm(c);
    }
    const double parseval = std::sqrt(2 * kPi * sum_sq);
    const double quad = lp_norm(BoundarySpec(poly), 2.0, kGrid);
    CHECK(std::fabs(quad - parseval) < 1e-10 * std::max(1.0, parseval));
  }
}

TEST_CASE("fourier_coefficients recovers trig polynomial modes") {
  const BoundarySpec spec{TrigPolyBoundary{{{3, {2.0, 1.0}}}}};
  const FourierSpectrum spectrum = fourier_coefficients(spec, 5, kGrid);
  CHECK(std::abs(spectrum.at(3) - Complex{2.0, 1.0}) < 1e-12);
  for (int k = -5; k <= 5; ++k) {
    if (k != 3) CHECK(std::abs(spectrum.at(k)) < 1e-12);
  }
}

TEST_CASE("fourier_coefficients of the zero boundary") {
  const BoundarySpec zero{TrigPolyBoundary{}};
  const FourierSpectrum spectrum = fourier_coefficients(zero, 4, kGrid);
  for (int k = -4; k <= 4; ++k) CHECK(std::abs(spectrum.at(k)) == 0.0);
}

TEST_CASE("fourier_coefficients of the jump extremal boundary") {
  // Square-wave series: c_k = 2M/(pi i k) at odd k; jumps cap accuracy at
  // O(1/node_count).
  const BoundarySpec extremal{ExtremalBoundary{1, 1.0, {1, 0}, {1, 0}}};
  const FourierSpectrum spectrum = fourier_coefficients(extremal, 5, kGrid);
  const Complex expected = 2.0 / (kPi * Complex{0.0, 1.0});
  CHECK(std::abs(spectrum.at(1) - expected) < 2e-3);
  CHECK(std::abs(spectrum.at(-1) + expected) < 2e-3);
  CHECK(std::abs(spectrum.at(2)) < 2e-3);
}

TEST_CASE("samples boundaries flow through norms and spectra") {
  const BoundarySpec rotation{ExponentialBoundary{1, {1.0, 0.0}}};
  const BoundarySpec samples{SamplesBoundary{sample_boundary(rotation, kGrid)}};
  CHECK(lp_norm(samples, kInf, kGrid) == doctest::Approx(1.0).epsilon(1e-14));
  const FourierSpectrum spectrum = fourier_coefficients(samples, 3, kGrid);
  CHECK(std::abs(spectrum.at(1) - Complex{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(spectrum.at(-1)) < 1e-12);
}

TEST_CASE("fourier_coefficients rejects aliasing truncations") {
  const BoundarySpec spec{TrigPolyBoundary{{{1, {1.0, 0.0}}}}};
  const CircleGrid small(16);
  CHECK_NOTHROW(fourier_coefficients(spec, 7, small));
  CHECK_THROWS_AS(fourier_coefficients(spec, 8, small), Error);
}

TEST_CASE("fourier o trig_poly is the identity on coefficients") {
  TrialRng rng(11, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const int degree = rng.uniform_int(1, 16);
    TrigPolyBoundary poly;
    for (int k = -degree; k <= degree; ++k) poly.coeffs[k] = rng.complex_gaussian();
    const FourierSpectrum spectrum =
        fourier_coefficients(BoundarySpec(poly), degree, kGrid);
    for (int k = -degree; k <= degree; ++k) {
      CHECK(std::abs(spectrum.at(k) - poly.coeffs.at(k)) < 1e-12);
    }
  }
}

TEST_CASE("real boundary data gives Hermitian spectra") {
  TrialRng rng(13, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const int degree = rng.uniform_int(1, 12);
    TrigPolyBoundary poly;
    poly.coeffs[0] = Complex{rng.gaussian(), 0.0};
    for (int k = 1; k <= degree; ++k) {
      const Complex c = rng.complex_gaussian();
      poly.coeffs[k] = c;
      poly.coeffs[-k] = std::conj(c);  // makes F real-valued
    }
    const FourierSpectrum spectrum =
        fourier_coefficients(BoundarySpec(poly), degree + 2, kGrid);
    for (int k = 0; k <= degree + 2; ++k) {
      CHECK(std::abs(spectrum.at(-k) - std::conj(spectrum.at(k))) < 1e-10);
    }
  }
}

TEST_CASE("cq_constant pins the classical values") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(std::fabs(cq_constant(n, 1.0, kGrid) - 2.0 / kPi) < 1e-13);
    CHECK(cq_constant(n, kInf, kGrid) == 1.0);
  }
  // Exact oracle: mean of cos^2 over the circle is 1/2.
  CHECK(std::fabs(cq_constant(1, 2.0, kGrid) - std::sqrt(0.5)) < 1e-12);
  CHECK_THROWS_AS(cq_constant(1, 0.99, kGrid), Error);
  CHECK_THROWS_AS(cq_constant(0, 2.0, kGrid), Error);
}

TEST_CASE("cq_constant is n-independent") {
  for (double q : {1.0, 1.5, 2.0, 4.0}) {
    const double base = cq_constant(1, q, kGrid);
    for (int n = 2; n <= 5; ++n) {
      CHECK(std::fabs(cq_constant(n, q, kGrid) - base) < 1e-10);
    }
  }
}

TEST_CASE("cq_value agrees with the Gamma-function oracle") {
  for (double q : {1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 7.5, 16.0, 64.0}) {
    CHECK(std::fabs(cq_value(q) - oracles::cq_gamma(q)) < 1e-12);
  }
}

TEST_CASE("cq_value is monotone nondecreasing in q") {
  const double ladder[] = {1.0, 1.1, 1.5, 2.0, 2.5, 4.0, 8.0, 32.0, 128.0};
  double prev = 0.0;
  for (double q : ladder) {
    const double value = cq_value(q);
    CHECK(value >= prev - 1e-14);
    CHECK(value <= 1.0 + 1e-14);
    prev = value;
  }
  CHECK(cq_value(kInf) == 1.0);
}

TEST_CASE("conjugate exponents pair off with exact endpoints") {
  CHECK(conjugate_exponent(1.0) == kInf);
  CHECK(conjugate_exponent(kInf) == 1.0);
  CHECK(conjugate_exponent(2.0) == 2.0);
  CHECK(conjugate_exponent(4.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(conjugate_exponent(0.5), Error);
}
