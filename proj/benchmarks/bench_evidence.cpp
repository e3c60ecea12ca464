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

#include <benchmark/benchmark.h>

#include <random>

#include "b2s/exp_family.hpp"
#include "b2s/parametric.hpp"

using namespace b2s;

namespace {

Dataset random_gaussian(int n, int d, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd rows(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) rows(i, j) = normal(rng);
  }
  return Dataset::gaussian(std::move(rows));
}

void BM_SuffStatsGaussian(benchmark::State& state) {
  const Dataset d = random_gaussian(static_cast<int>(state.range(0)),
                                    static_cast<int>(state.range(1)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(suff_stats(d));
  }
}

void BM_LogMarginalGaussian(benchmark::State& state) {
  const Dataset d = random_gaussian(static_cast<int>(state.range(0)),
                                    static_cast<int>(state.range(1)), 2);
  const Prior prior = default_prior(d);
  const SufficientStats stats = suff_stats(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_marginal(stats, prior));
  }
}

void BM_LogMarginalBernoulli(benchmark::State& state) {
  std::mt19937 rng(3);
  std::vector<int> values(static_cast<std::size_t>(state.range(0)));
  for (int& v : values) v = static_cast<int>(rng() % 2);
  const SufficientStats stats = suff_stats(Dataset::bernoulli(values));
  const Prior prior = Prior::bernoulli(1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_marginal(stats, prior));
  }
}

void BM_ParametricTestGaussian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Dataset x = random_gaussian(n, 2, 4);
  const Dataset y = random_gaussian(n, 2, 5);
  const Prior prior = default_prior(Dataset::concat(x, y));
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_bayes_factor_parametric(x, y, prior));
  }
}

}  // namespace

BENCHMARK(BM_SuffStatsGaussian)->Args({100, 2})->Args({1000, 2})->Args({1000, 8});
BENCHMARK(BM_LogMarginalGaussian)->Args({1000, 2})->Args({1000, 8});
BENCHMARK(BM_LogMarginalBernoulli)->Arg(1000);
BENCHMARK(BM_ParametricTestGaussian)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
