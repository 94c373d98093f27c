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

#ifndef HMAP_VERIFY_HPP
#define HMAP_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hmap/mappings.hpp"
#include "hmap/radii.hpp"

namespace hmap {

/// Configuration of the randomized property harness.  Everything is seeded;
/// identical configs produce bit-identical verdicts.
struct VerifyConfig {
  std::uint64_t seed = 42;
  int trials = 100;
  std::vector<double> p_grid = {1.0, 1.5, 2.0, 4.0,
                                std::numeric_limits<double>::infinity()};
  std::size_t grid_nodes = CircleGrid::kDefaultNodes;
  int N = 64;            // coefficient truncation
  int max_degree = 16;   // random trig polynomials draw degree in [1, max]
  double tolerance = 1e-9;
};

/// Machine-readable outcome of one property over all trials.
struct Verdict {
  std::string property_name;
  int pass_count = 0;
  int fail_count = 0;
  double worst_margin = 0.0;
  std::string witness;  // JSON of the worst-case input
  std::string note;     // convention caveats etc., empty when none
};

/// Deterministic per-trial random stream.  The per-trial seed is derived
/// from (seed, trial index) with a splitmix64 mix, so parallel and serial
/// executions of the trial loop agree.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);

  double uniform();          // [0, 1)
  double gaussian();         // Box-Muller from uniform bits
  Complex complex_gaussian();
  int uniform_int(int lo, int hi);  // inclusive

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Random trigonometric polynomial of the given degree with i.i.d. complex
/// Gaussian coefficients, rescaled so lp_norm(spec, p, grid, convention)
/// equals target_norm exactly (the norm is homogeneous of degree one).
/// Throws InvalidDegree for degree < 1.
BoundarySpec gen_boundary(TrialRng& rng, int degree, double p,
                          double target_norm, const CircleGrid& grid,
                          NormConvention convention =
                              NormConvention::kNormalized);

/// Coefficient bounds |a_n|, |b_n| <= ||F||_p and
/// |a_n| + |b_n| <= 2 C_q ||F||_p over all trials and exponents in
/// cfg.p_grid.  Norms are taken in the normalized convention, under which
/// both bounds are sharp; worst_margin is the largest observed
/// (|a_n| + |b_n|) / (2 C_q ||F||_p).  Failures are recorded, not thrown.
Verdict check_coeff_bounds(const VerifyConfig& cfg);

/// Bohr inequality at r_p = 1/(2 C_q + 1): after removing the constant
/// Fourier mode, majorant value + tail at r_p must not exceed ||F||_p.
Verdict check_bohr(const VerifyConfig& cfg);

/// Growth bound |f(z)| <= (4/pi) arctan |z| for maps with f(0) = 0 induced
/// by |F| <= 1, sampled on |z| in {0.1,...,0.9} x 64 angles.
Verdict check_schwarz(const VerifyConfig& cfg);

/// Univalence inside the r0 disk of landau_lp(p, norm): draws are
/// normalized to a_0 = 0, a_1 = 1, b_1 = 0 (draws with a_1 ~ 0 are
/// rejected and resampled) and their remaining coefficients rescaled onto
/// the class bound |a_n| + |b_n| <= K = 2 C_q norm when they exceed it.
/// Checks J > 0 on a 64 x 128 polar grid inside r0 (1 - 1e-6) and pairwise
/// distinct images on a coarse 32 x 32 sample set with the scale-respecting
/// threshold |f(z1) - f(z2)| > tolerance |z1 - z2|.
Verdict check_univalence(const VerifyConfig& cfg, double norm, double p);

/// Schlicht-disk bound of landau_lp: min over 512 boundary angles of
/// |f(r0 e^{i theta})| >= R0 - tolerance for every conforming draw.
Verdict check_schlicht(const VerifyConfig& cfg, double norm, double p);

/// The full default suite in canonical (name-sorted) order:
/// bohr_majorant, coeff_bound_pair, coeff_bound_single, schlicht_disk,
/// schwarz_growth, univalence_jacobian.  Univalence and schlicht run at
/// K = 1 via p = 2, norm = 1/(2 C_2), 20 draws.
std::vector<Verdict> run_default_suite(const VerifyConfig& cfg);

}  // namespace hmap

#endif  // HMAP_VERIFY_HPP
