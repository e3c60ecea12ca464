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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "b2s/parametric.hpp"

using namespace b2s;

namespace {

Dataset bern(std::vector<int> v) { return Dataset::bernoulli(std::move(v)); }

}  // namespace

TEST_SUITE("parametric") {

TEST_CASE("golden values from hand beta-integral arithmetic") {
  const Prior flat = Prior::bernoulli(1.0, 1.0);
  // X={1}, Y={0}: (1/2 * 1/2) / (1/6) = 1.5
  CHECK(log_bayes_factor_parametric(bern({1}), bern({0}), flat) ==
        doctest::Approx(std::log(1.5)).epsilon(1e-12));
  // X={1,1,1,1}, Y={0,0,0,0}: (1/5 * 1/5) / (1/630) = 25.2
  CHECK(log_bayes_factor_parametric(bern({1, 1, 1, 1}), bern({0, 0, 0, 0}), flat) ==
        doctest::Approx(std::log(25.2)).epsilon(1e-12));
}

TEST_CASE("an empty sample forces a unit Bayes factor") {
  const Prior flat = Prior::bernoulli(1.0, 1.0);
  CHECK(log_bayes_factor_parametric(bern({1, 0, 1}), bern({}), flat) == 0.0);
  CHECK(log_bayes_factor_parametric(bern({}), bern({1}), flat) == 0.0);
  CHECK_THROWS_AS(log_bayes_factor_parametric(bern({}), bern({}), flat),
                  std::invalid_argument);
}

TEST_CASE("decide follows the sign rule with ties to H0") {
  CHECK(decide(0.4055) == Decision::h1_different);
  CHECK(decide(-2.0) == Decision::h0_same);
  CHECK(decide(0.0) == Decision::h0_same);
  CHECK_THROWS_AS(decide(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_THROWS_AS(decide(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("result metadata") {
  const Prior flat = Prior::bernoulli(1.0, 1.0);
  const TestResult r = parametric_test(bern({1, 1}), bern({0}), flat);
  CHECK(r.method == Method::parametric);
  CHECK(r.family == Family::bernoulli);
  CHECK(r.m1 == 2);
  CHECK(r.m2 == 1);
  CHECK_FALSE(r.approximate);
  CHECK_FALSE(r.alpha.has_value());
  CHECK(r.decision == decide(r.log_bayes_factor));
}

TEST_CASE("swap and permutation leave the value bit-identical") {
  std::mt19937 rng(11);
  std::normal_distribution<double> normal(0.0, 1.5);
  for (int trial = 0; trial < 10; ++trial) {
    const int m1 = 3 + static_cast<int>(rng() % 10);
    const int m2 = 3 + static_cast<int>(rng() % 10);
    Eigen::MatrixXd xs(m1, 2), ys(m2, 2);
    for (int i = 0; i < m1; ++i) {
      xs(i, 0) = normal(rng);
      xs(i, 1) = normal(rng);
    }
    for (int i = 0; i < m2; ++i) {
      ys(i, 0) = normal(rng) + 1.0;
      ys(i, 1) = normal(rng);
    }
    const Dataset x = Dataset::gaussian(xs);
    const Dataset y = Dataset::gaussian(ys);
    const Prior prior = default_prior(Dataset::concat(x, y));

    const double base = log_bayes_factor_parametric(x, y, prior);
    CHECK(log_bayes_factor_parametric(y, x, prior) == base);

    Eigen::MatrixXd shuffled = xs;
    for (int i = m1 - 1; i > 0; --i) {
      const int j = static_cast<int>(rng() % static_cast<unsigned>(i + 1));
      shuffled.row(i).swap(shuffled.row(j));
    }
    CHECK(log_bayes_factor_parametric(Dataset::gaussian(shuffled), y, prior) == base);
  }
}

TEST_CASE("poisson base measure cancels: h-ratio route agrees") {
  const Prior prior = Prior::poisson(2.0, 1.5);
  const Dataset x = Dataset::poisson({3, 7, 1, 0});
  const Dataset y = Dataset::poisson({2, 2, 5});

  const SufficientStats sx = suff_stats(x);
  const SufficientStats sy = suff_stats(y);
  const SufficientStats sxy = combine(sx, sy);

  const double three_marginal = log_bayes_factor_parametric(x, y, prior);
  const double h_ratio = (log_marginal(sx, prior) - log_base_measure(sx)) +
                         (log_marginal(sy, prior) - log_base_measure(sy)) -
                         (log_marginal(sxy, prior) - log_base_measure(sxy));
  CHECK(std::abs(three_marginal - h_ratio) <= 1e-10);
}

TEST_CASE("factorized-H1 identity in log space") {
  const Prior prior = Prior::bernoulli(2.0, 2.0);
  const Dataset x = bern({1, 1, 0, 1});
  const Dataset y = bern({0, 0, 1});
  const double log_bf = log_bayes_factor_parametric(x, y, prior);
  const double joint = log_marginal(combine(suff_stats(x), suff_stats(y)), prior);
  const double product = log_marginal(suff_stats(x), prior) + log_marginal(suff_stats(y), prior);
  const double lhs = log_bf + joint;
  CHECK(std::abs(lhs - product) <= 1e-10 * std::max(1.0, std::abs(product)));
}

}  // TEST_SUITE
