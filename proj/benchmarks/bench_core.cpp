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

#include <benchmark/benchmark.h>

#include <limits>

#include "hmap/radii.hpp"
#include "hmap/verify.hpp"

namespace {

using namespace hmap;

constexpr double kInf = std::numeric_limits<double>::infinity();

BoundarySpec random_poly(int degree) {
  TrialRng rng(1234, 0);
  TrigPolyBoundary poly;
  for (int k = -degree; k <= degree; ++k) poly.coeffs[k] = rng.complex_gaussian();
  return BoundarySpec(poly);
}

void BM_lp_norm(benchmark::State& state) {
  const CircleGrid grid(static_cast<std::size_t>(state.range(0)));
  const BoundarySpec spec = random_poly(16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_norm(spec, 2.0, grid));
  }
}
BENCHMARK(BM_lp_norm)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_fourier_coefficients(benchmark::State& state) {
  const CircleGrid grid;
  const BoundarySpec spec = random_poly(16);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier_coefficients(spec, N, grid));
  }
}
BENCHMARK(BM_fourier_coefficients)->Arg(16)->Arg(64)->Arg(256);

void BM_cq_constant(benchmark::State& state) {
  const CircleGrid grid;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cq_constant(1, 1.5, grid));
  }
}
BENCHMARK(BM_cq_constant);

void BM_poisson_extend(benchmark::State& state) {
  const CircleGrid grid;
  const BoundarySpec spec = random_poly(16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poisson_extend(spec, {0.3, 0.4}, grid));
  }
}
BENCHMARK(BM_poisson_extend);

void BM_eval_map(benchmark::State& state) {
  const CoeffTable table = extremal_coeffs(1, 1.0, {1, 0}, {1, 0}, 401);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_map(table, {0.3, 0.4}));
  }
}
BENCHMARK(BM_eval_map);

void BM_majorant(benchmark::State& state) {
  const CoeffTable table = extremal_coeffs(1, 1.0, {1, 0}, {1, 0}, 401);
  for (auto _ : state) {
    benchmark::DoNotOptimize(majorant(table, 0.5));
  }
}
BENCHMARK(BM_majorant);

void BM_empirical_bohr(benchmark::State& state) {
  const CoeffTable table = extremal_coeffs(1, 1.0, {1, 0}, {1, 0}, 401);
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_bohr(table, 1.0, 1e-12));
  }
}
BENCHMARK(BM_empirical_bohr);

void BM_bohr_lp(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bohr_lp(kInf));
  }
}
BENCHMARK(BM_bohr_lp);

void BM_check_coeff_bounds(benchmark::State& state) {
  VerifyConfig cfg;
  cfg.trials = 2;
  cfg.N = 32;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_coeff_bounds(cfg));
  }
}
BENCHMARK(BM_check_coeff_bounds)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
