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

#include "hmap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hmap/errors.hpp"
#include "hmap/serialize.hpp"

namespace hmap {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string p_label(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

std::string make_witness(const BoundarySpec& spec, double p, int trial,
                         int index = -1) {
  std::ostringstream os;
  os << "{\"boundary\":" << to_json(spec) << ",\"p\":\"" << p_label(p)
     << "\",\"trial\":" << trial;
  if (index >= 0) os << ",\"n\":" << index;
  os << "}";
  return os.str();
}

const char* kConventionNote =
    "norms use the normalized convention ((1/2pi) integral |F|^p dt)^(1/p); "
    "the plain-integral convention differs by (2pi)^(1/p) for p < inf";

void validate_config(const VerifyConfig& cfg) {
  if (cfg.trials < 1) throw Error("InvalidBound", "trials must be >= 1");
  if (cfg.tolerance < 1e-12) {
    throw Error("InvalidTolerance", "tolerance must be >= 1e-12");
  }
  if (cfg.max_degree < 1) throw Error("InvalidDegree", "max_degree >= 1");
}

/// Build a table straight from a trig-polynomial coefficient map (no
/// quadrature; exact for degree <= N).
CoeffTable table_from_modes(const std::map<int, Complex>& modes, int N) {
  CoeffTable table;
  table.a.assign(static_cast<std::size_t>(N) + 1, Complex{0.0, 0.0});
  table.b.assign(static_cast<std::size_t>(N) + 1, Complex{0.0, 0.0});
  for (const auto& [k, c] : modes) {
    if (k >= 0 && k <= N) table.a[static_cast<std::size_t>(k)] = c;
    if (k <= -1 && -k <= N) table.b[static_cast<std::size_t>(-k)] = std::conj(c);
  }
  return table;
}

struct NormalizedDraw {
  TrigPolyBoundary boundary;  // post-normalization coefficient map
  CoeffTable table;
  int rejected = 0;
};

/// Draw a random trig polynomial and push it into the normalized class of
/// landau_lp: a_0 = 0, a_1 = 1, b_1 = 0, and |a_n| + |b_n| <= K for n >= 2.
/// Draws whose first analytic coefficient is numerically zero are rejected
/// and resampled.
NormalizedDraw normalized_draw(TrialRng& rng, const VerifyConfig& cfg,
                               double p, double K, const CircleGrid& grid) {
  NormalizedDraw out;
  for (int attempt = 0; attempt < 100; ++attempt) {
    const int degree = rng.uniform_int(1, cfg.max_degree);
    const BoundarySpec raw =
        gen_boundary(rng, degree, p, 1.0, grid, NormConvention::kNormalized);
    std::map<int, Complex> modes = raw.get_if<TrigPolyBoundary>()->coeffs;

    double peak = 0.0;
    for (const auto& [k, c] : modes) peak = std::max(peak, std::abs(c));
    const Complex a1 = modes.count(1) ? modes.at(1) : Complex{0.0, 0.0};
    if (std::abs(a1) < 1e-8 * peak) {
      ++out.rejected;
      continue;
    }

    for (auto& [k, c] : modes) c /= a1;  // f -> f / a_1
    modes[0] = Complex{0.0, 0.0};
    modes[-1] = Complex{0.0, 0.0};

    double defect = 0.0;
    for (const auto& [k, c] : modes) {
      const int n = std::abs(k);
      if (n < 2) continue;
      const Complex pos = modes.count(n) ? modes.at(n) : Complex{0.0, 0.0};
      const Complex neg = modes.count(-n) ? modes.at(-n) : Complex{0.0, 0.0};
      defect = std::max(defect, std::abs(pos) + std::abs(neg));
    }
    if (defect > K) {
      const double shrink = K / defect;
      for (auto& [k, c] : modes) {
        if (std::abs(k) >= 2) c *= shrink;
      }
    }

    out.boundary = TrigPolyBoundary{modes};
    out.table = table_from_modes(modes, cfg.N);
    return out;
  }
  throw Error("InvalidDegree",
              "could not draw a normalizable boundary after 100 attempts");
}

struct CoeffBoundMargins {
  Verdict single;  // |a_n|, |b_n| <= ||F||_p
  Verdict pair;    // |a_n| + |b_n| <= 2 C_q ||F||_p
};

CoeffBoundMargins coeff_bound_margins(const VerifyConfig& cfg) {
  validate_config(cfg);
  const CircleGrid grid(cfg.grid_nodes);
  CoeffBoundMargins out;
  out.single.property_name = "coeff_bound_single";
  out.pair.property_name = "coeff_bound_pair";
  out.single.note = kConventionNote;
  out.pair.note = kConventionNote;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    TrialRng rng(cfg.seed, static_cast<std::uint64_t>(trial));
    bool single_ok = true, pair_ok = true;
    for (double p : cfg.p_grid) {
      const int degree = rng.uniform_int(1, cfg.max_degree);
      const BoundarySpec spec =
          gen_boundary(rng, degree, p, 1.0, grid, NormConvention::kNormalized);
      const double norm =
          lp_norm(spec, p, grid, NormConvention::kNormalized);
      const double q = conjugate_exponent(p);
      const double pair_bound = 2.0 * cq_constant(1, q, grid) * norm;
      const CoeffTable table = coeff_table(spec, cfg.N, grid);
      for (int n = 1; n <= cfg.N; ++n) {
        const auto idx = static_cast<std::size_t>(n);
        const double an = std::abs(table.a[idx]);
        const double bn = std::abs(table.b[idx]);
        const double m1 = std::max(an, bn) / norm;
        const double m2 = (an + bn) / pair_bound;
        if (m1 > out.single.worst_margin) {
          out.single.worst_margin = m1;
          out.single.witness = make_witness(spec, p, trial, n);
        }
        if (m2 > out.pair.worst_margin) {
          out.pair.worst_margin = m2;
          out.pair.witness = make_witness(spec, p, trial, n);
        }
        single_ok = single_ok && m1 <= 1.0 + cfg.tolerance;
        pair_ok = pair_ok && m2 <= 1.0 + cfg.tolerance;
      }
    }
    (single_ok ? out.single.pass_count : out.single.fail_count) += 1;
    (pair_ok ? out.pair.pass_count : out.pair.fail_count) += 1;
  }
  return out;
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : engine_(splitmix64(splitmix64(seed) ^
                         (0x9e3779b97f4a7c15ULL * (trial + 1)))) {}

double TrialRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double TrialRng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  have_spare_ = true;
  spare_ = radius * std::sin(2.0 * kPi * u2);
  return radius * std::cos(2.0 * kPi * u2);
}

Complex TrialRng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

int TrialRng::uniform_int(int lo, int hi) {
  const auto span = static_cast<double>(hi - lo + 1);
  const int offset = static_cast<int>(uniform() * span);
  return lo + std::min(offset, hi - lo);
}

BoundarySpec gen_boundary(TrialRng& rng, int degree, double p,
                          double target_norm, const CircleGrid& grid,
                          NormConvention convention) {
  if (degree < 1) throw Error("InvalidDegree", "degree must be >= 1");
  TrigPolyBoundary poly;
  for (int k = -degree; k <= degree; ++k) {
    poly.coeffs[k] = rng.complex_gaussian();
  }
  BoundarySpec spec(poly);
  const double current = lp_norm(spec, p, grid, convention);
  const double scale = target_norm / current;  // norm is homogeneous
  for (auto& [k, c] : poly.coeffs) c *= scale;
  return BoundarySpec(poly);
}

Verdict check_coeff_bounds(const VerifyConfig& cfg) {
  const CoeffBoundMargins margins = coeff_bound_margins(cfg);
  Verdict merged;
  merged.property_name = "coeff_bounds";
  merged.note = kConventionNote;
  merged.worst_margin = margins.pair.worst_margin;
  merged.witness = margins.pair.witness;
  // Both sub-properties count per trial, so the conservative merge is the
  // smaller pass count.
  merged.pass_count =
      std::min(margins.single.pass_count, margins.pair.pass_count);
  merged.fail_count = cfg.trials - merged.pass_count;
  return merged;
}

Verdict check_bohr(const VerifyConfig& cfg) {
  validate_config(cfg);
  const CircleGrid grid(cfg.grid_nodes);
  Verdict verdict;
  verdict.property_name = "bohr_majorant";
  verdict.note = kConventionNote;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    TrialRng rng(cfg.seed, static_cast<std::uint64_t>(trial));
    bool ok = true;
    for (double p : cfg.p_grid) {
      const int degree = rng.uniform_int(1, cfg.max_degree);
      const BoundarySpec raw =
          gen_boundary(rng, degree, p, 1.0, grid, NormConvention::kNormalized);
      TrigPolyBoundary poly = *raw.get_if<TrigPolyBoundary>();
      poly.coeffs.erase(0);  // remove the constant Fourier mode
      const BoundarySpec spec(poly);

      const double norm = lp_norm(spec, p, grid, NormConvention::kNormalized);
      if (norm == 0.0) continue;  // zero map passes trivially
      const double rp = bohr_lp(p).value;
      const CoeffTable table = coeff_table(spec, cfg.N, grid, p);
      const MajorantValue m = majorant(table, rp);
      const double margin = (m.value + m.tail) / norm;
      if (margin > verdict.worst_margin) {
        verdict.worst_margin = margin;
        verdict.witness = make_witness(spec, p, trial);
      }
      ok = ok && margin <= 1.0 + cfg.tolerance;
    }
    (ok ? verdict.pass_count : verdict.fail_count) += 1;
  }
  return verdict;
}

Verdict check_schwarz(const VerifyConfig& cfg) {
  validate_config(cfg);
  const CircleGrid grid(cfg.grid_nodes);
  Verdict verdict;
  verdict.property_name = "schwarz_growth";

  // sup over the whole circle of a degree-d trig polynomial exceeds the
  // grid max by at most the Bernstein factor 1/(1 - d h / 2); dividing by
  // the inflated bound keeps the true sup at or below one.
  const double h = grid.step();

  for (int trial = 0; trial < cfg.trials; ++trial) {
    TrialRng rng(cfg.seed, static_cast<std::uint64_t>(trial));
    const int degree = rng.uniform_int(1, cfg.max_degree);
    const double inf = std::numeric_limits<double>::infinity();
    const BoundarySpec raw =
        gen_boundary(rng, degree, inf, 1.0, grid, NormConvention::kNormalized);
    TrigPolyBoundary poly = *raw.get_if<TrigPolyBoundary>();
    poly.coeffs.erase(0);  // f(0) = 0
    BoundarySpec dropped(poly);
    const double grid_sup =
        lp_norm(dropped, inf, grid, NormConvention::kNormalized);
    if (grid_sup == 0.0) {
      verdict.pass_count += 1;
      continue;
    }
    const double sup_bound = grid_sup / (1.0 - 0.5 * degree * h);
    for (auto& [k, c] : poly.coeffs) c /= sup_bound;
    const BoundarySpec spec(poly);
    const CoeffTable table = coeff_table(spec, cfg.N, grid);

    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 9; ++i) {
      const double r = 0.1 * i;
      const double bound = (4.0 / kPi) * std::atan(r);
      for (int j = 0; j < 64; ++j) {
        const Complex z = std::polar(r, 2.0 * kPi * j / 64.0);
        worst = std::max(worst, std::abs(eval_map(table, z).f) - bound);
      }
    }
    if (worst > verdict.worst_margin) {
      verdict.worst_margin = worst;
      verdict.witness = make_witness(spec, inf, trial);
    }
    (worst <= cfg.tolerance ? verdict.pass_count : verdict.fail_count) += 1;
  }
  return verdict;
}

Verdict check_univalence(const VerifyConfig& cfg, double norm, double p) {
  validate_config(cfg);
  const CircleGrid grid(cfg.grid_nodes);
  const double q = conjugate_exponent(p);
  const double K = 2.0 * cq_value(q) * norm;
  const double r0 = landau_lp(p, norm).r0.value;
  const double rim = r0 * (1.0 - 1e-6);

  Verdict verdict;
  verdict.property_name = "univalence_jacobian";
  verdict.worst_margin = std::numeric_limits<double>::infinity();

  for (int trial = 0; trial < cfg.trials; ++trial) {
    TrialRng rng(cfg.seed, static_cast<std::uint64_t>(trial));
    const NormalizedDraw draw = normalized_draw(rng, cfg, p, K, grid);

    double min_j = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 64; ++i) {
      const double r = rim * (i + 1) / 64.0;
      for (int j = 0; j < 128; ++j) {
        const Complex z = std::polar(r, 2.0 * kPi * j / 128.0);
        min_j = std::min(min_j, eval_map(draw.table, z).J);
      }
    }

    // Coarse pairwise-injectivity sampling with the scale-respecting
    // threshold |f(z1) - f(z2)| > tol |z1 - z2|.
    bool collision = false;
    std::vector<Complex> points, images;
    points.reserve(32 * 32);
    for (int i = 0; i < 32 && !collision; ++i) {
      const double r = rim * (i + 1) / 32.0;
      for (int j = 0; j < 32; ++j) {
        const Complex z = std::polar(r, 2.0 * kPi * j / 32.0);
        points.push_back(z);
        images.push_back(eval_map(draw.table, z).f);
      }
    }
    for (std::size_t i = 0; i < points.size() && !collision; ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        if (std::abs(images[i] - images[j]) <=
            cfg.tolerance * std::abs(points[i] - points[j])) {
          collision = true;
          break;
        }
      }
    }

    if (min_j < verdict.worst_margin) {
      verdict.worst_margin = min_j;
      verdict.witness = make_witness(BoundarySpec(draw.boundary), p, trial);
    }
    (min_j > 0.0 && !collision ? verdict.pass_count : verdict.fail_count) += 1;
  }
  return verdict;
}

Verdict check_schlicht(const VerifyConfig& cfg, double norm, double p) {
  validate_config(cfg);
  const CircleGrid grid(cfg.grid_nodes);
  const double q = conjugate_exponent(p);
  const double K = 2.0 * cq_value(q) * norm;
  const LandauLpResult landau = landau_lp(p, norm);
  const double r0 = landau.r0.value;
  const double R0 = landau.R0.value;

  Verdict verdict;
  verdict.property_name = "schlicht_disk";
  verdict.worst_margin = std::numeric_limits<double>::infinity();

  for (int trial = 0; trial < cfg.trials; ++trial) {
    TrialRng rng(cfg.seed, static_cast<std::uint64_t>(trial));
    const NormalizedDraw draw = normalized_draw(rng, cfg, p, K, grid);

    double min_mod = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 512; ++j) {
      const Complex z = std::polar(r0, 2.0 * kPi * j / 512.0);
      min_mod = std::min(min_mod, std::abs(eval_map(draw.table, z).f));
    }
    const double margin = min_mod - R0;
    if (margin < verdict.worst_margin) {
      verdict.worst_margin = margin;
      verdict.witness = make_witness(BoundarySpec(draw.boundary), p, trial);
    }
    (margin >= -cfg.tolerance ? verdict.pass_count : verdict.fail_count) += 1;
  }
  return verdict;
}

std::vector<Verdict> run_default_suite(const VerifyConfig& cfg) {
  std::vector<Verdict> verdicts;
  const CoeffBoundMargins margins = coeff_bound_margins(cfg);
  verdicts.push_back(margins.single);
  verdicts.push_back(margins.pair);
  verdicts.push_back(check_bohr(cfg));
  verdicts.push_back(check_schwarz(cfg));

  // Univalence and schlicht run at K = 1 through p = 2: norm = 1/(2 C_2).
  VerifyConfig landau_cfg = cfg;
  landau_cfg.trials = 20;
  const double norm = 1.0 / (2.0 * cq_value(2.0));
  verdicts.push_back(check_univalence(landau_cfg, norm, 2.0));
  verdicts.push_back(check_schlicht(landau_cfg, norm, 2.0));

  std::sort(verdicts.begin(), verdicts.end(),
            [](const Verdict& x, const Verdict& y) {
              return x.property_name < y.property_name;
            });
  return verdicts;
}

}  // namespace hmap
