// Copyright 2026 The fracgen Authors
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

#include <random>

#include "fracgen/diffusion.hpp"
#include "fracgen/generators.hpp"
#include "fracgen/linalg.hpp"
#include "fracgen/operators.hpp"
#include "fracgen/steady.hpp"

namespace fracgen {
namespace {

void BM_GrunwaldWeights(benchmark::State& state) {
  const auto g = beta_table<double>(static_cast<int>(state.range(0)), 1.0, 1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grunwald_weights(g, 4096));
  }
}
BENCHMARK(BM_GrunwaldWeights)->DenseRange(1, 6);

void BM_VerifyOrderExact(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto g = beta_table<Rational>(p, Rational(1), Rational(3, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_order(g, p));
  }
}
BENCHMARK(BM_VerifyOrderExact)->DenseRange(1, 6);

void BM_LuFactor(benchmark::State& state) {
  const GridSpec grid(0.0, 1.0, static_cast<int>(state.range(0)));
  const auto w = grunwald_weights(beta_table<double>(2, 1.0, 1.5), required_weight_index(grid, 1));
  const auto a = assemble_frac_matrix(w, grid, Side::left).dense();
  for (auto _ : state) {
    LuFactorization lu(a);
    benchmark::DoNotOptimize(lu.reciprocal_condition());
  }
}
BENCHMARK(BM_LuFactor)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_SteadySolve(benchmark::State& state) {
  const auto problem = power_steady_problem(1.5);
  const GridSpec grid(0.0, 1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_steady(problem, grid, Scheme::order3));
  }
}
BENCHMARK(BM_SteadySolve)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_CrankNicolsonStep(benchmark::State& state) {
  const auto problem = polynomial_diffusion_problem(1.5);
  const GridSpec grid(0.0, 1.0, static_cast<int>(state.range(0)));
  const CrankNicolson cn(problem, grid, 100, Scheme::order3);
  auto u = cn.initial_state();
  int m = 0;
  for (auto _ : state) {
    u = cn.step(u, m);
    m = (m + 1) % 100;
  }
}
BENCHMARK(BM_CrankNicolsonStep)->RangeMultiplier(2)->Range(64, 512);

}  // namespace
}  // namespace fracgen

BENCHMARK_MAIN();
