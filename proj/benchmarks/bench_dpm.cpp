// Copyright 2026 b2s authors.
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

// The exact partition sum grows with the Bell numbers; BHC is the O(n^2)
// alternative. These two benchmarks show the crossover.

#include <benchmark/benchmark.h>

#include <random>

#include "b2s/bhc.hpp"
#include "b2s/dpm_exact.hpp"

using namespace b2s;

namespace {

Dataset random_gaussian1d(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd rows(n, 1);
  for (int i = 0; i < n; ++i) rows(i, 0) = normal(rng) + (i % 2 ? 1.5 : -1.5);
  return Dataset::gaussian(std::move(rows));
}

void BM_DpmMarginalExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Dataset d = random_gaussian1d(n, 7);
  const Prior prior = default_prior(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_dpm_marginal_exact(d, 1.0, prior));
  }
}

void BM_BhcBuildTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Dataset d = random_gaussian1d(n, 8);
  const Prior prior = default_prior(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_dpm_marginal_bhc(build_tree(d, 1.0, prior)));
  }
}

}  // namespace

BENCHMARK(BM_DpmMarginalExact)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BhcBuildTree)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
