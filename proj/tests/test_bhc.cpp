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

#include <cmath>
#include <random>

#include "b2s/bhc.hpp"
#include "b2s/dpm_exact.hpp"
#include "b2s/numerics.hpp"

using namespace b2s;

namespace {

Dataset gaussian1d(const std::vector<double>& values) {
  Eigen::MatrixXd rows(static_cast<int>(values.size()), 1);
  for (std::size_t i = 0; i < values.size(); ++i) rows(static_cast<int>(i), 0) = values[i];
  return Dataset::gaussian(std::move(rows));
}

}  // namespace

TEST_SUITE("bhc") {

TEST_CASE("single leaf: tree probability is the point evidence") {
  const Prior prior = Prior::bernoulli(1.0, 1.0);
  const Dataset d = Dataset::bernoulli({1});
  const BhcTree tree = build_tree(d, 1.0, prior);
  CHECK(tree.nodes.size() == 1);
  CHECK(log_dpm_marginal_bhc(tree) ==
        doctest::Approx(log_marginal(suff_stats(d), prior)).epsilon(1e-14));
  CHECK(validate_tree(tree));
}

TEST_CASE("two points: root follows the recursion by hand") {
  const double alpha = 0.7;
  const Prior prior = Prior::bernoulli(1.0, 1.0);
  const Dataset d = Dataset::bernoulli({1, 0});
  const BhcTree tree = build_tree(d, alpha, prior);
  REQUIRE(tree.nodes.size() == 3);

  // d_leaf = alpha, so d_root = alpha Gamma(2) + alpha^2 and
  // pi = 1 / (1 + alpha).
  const double pi = 1.0 / (1.0 + alpha);
  const double p_joint = std::exp(log_marginal(suff_stats(d), prior));
  const double p_split = 0.5 * 0.5;
  const double expected = std::log(pi * p_joint + (1.0 - pi) * p_split);
  CHECK(log_dpm_marginal_bhc(tree) == doctest::Approx(expected).epsilon(1e-12));

  // with both partitions of two points tree-consistent, the bound is exact
  const double exact = log_dpm_marginal_exact(d, alpha, prior);
  CHECK(std::abs(log_dpm_marginal_bhc(tree) - exact) <= 1e-10);
}

TEST_CASE("n=2 exactness across alphas and families") {
  for (const double alpha : {0.5, 1.0, 5.0}) {
    const Dataset db = Dataset::bernoulli({1, 1});
    const double bound_b = log_dpm_marginal_bhc(build_tree(db, alpha, Prior::bernoulli(2.0, 1.0)));
    CHECK(std::abs(bound_b - log_dpm_marginal_exact(db, alpha, Prior::bernoulli(2.0, 1.0))) <= 1e-10);

    const Dataset dg = gaussian1d({0.4, -1.3});
    const Prior pg = default_prior(dg);
    const double bound_g = log_dpm_marginal_bhc(build_tree(dg, alpha, pg));
    CHECK(std::abs(bound_g - log_dpm_marginal_exact(dg, alpha, pg)) <= 1e-10);
  }
}

TEST_CASE("lower bound against the exact oracle on random data") {
  std::mt19937 rng(123);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double alphas[] = {0.5, 1.0, 5.0};
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const double alpha = alphas[trial % 3];

    if (trial % 2 == 0) {
      std::vector<int> data(static_cast<std::size_t>(n));
      for (int& v : data) v = static_cast<int>(rng() % 2);
      const Dataset d = Dataset::bernoulli(data);
      const Prior prior = Prior::bernoulli(1.0, 1.0);
      const double bound = log_dpm_marginal_bhc(build_tree(d, alpha, prior));
      const double exact = log_dpm_marginal_exact(d, alpha, prior);
      CHECK(bound <= exact + 1e-9);
    } else {
      std::vector<double> data(static_cast<std::size_t>(n));
      for (double& v : data) v = normal(rng) + (rng() % 2 ? 2.5 : -2.5);
      const Dataset d = gaussian1d(data);
      const Prior prior = default_prior(d);
      const double bound = log_dpm_marginal_bhc(build_tree(d, alpha, prior));
      const double exact = log_dpm_marginal_exact(d, alpha, prior);
      CHECK(bound <= exact + 1e-9);
    }
  }
}

TEST_CASE("structure: members partition, leaves carry leaf quantities") {
  std::mt19937 rng(5);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> data(9);
  for (double& v : data) v = normal(rng);
  const Dataset d = gaussian1d(data);
  const Prior prior = default_prior(d);
  const double alpha = 1.0;
  const BhcTree tree = build_tree(d, alpha, prior);

  CHECK(validate_tree(tree));
  CHECK(tree.nodes.size() == 17);
  for (int i = 0; i < d.size(); ++i) {
    const BhcNode& leaf = tree.nodes[static_cast<std::size_t>(i)];
    CHECK(leaf.log_d == doctest::Approx(std::log(alpha)).epsilon(1e-15));
    CHECK(leaf.log_pi == 0.0);
    CHECK(leaf.log_p_tree == leaf.log_p_h1);
  }
}

TEST_CASE("each internal node mixes exactly its two hypotheses") {
  std::mt19937 rng(29);
  std::vector<int> data(8);
  for (int& v : data) v = static_cast<int>(rng() % 2);
  const Dataset d = Dataset::bernoulli(data);
  const BhcTree tree = build_tree(d, 0.8, Prior::bernoulli(1.0, 1.0));

  for (const BhcNode& node : tree.nodes) {
    if (node.left < 0) continue;
    const BhcNode& l = tree.nodes[static_cast<std::size_t>(node.left)];
    const BhcNode& r = tree.nodes[static_cast<std::size_t>(node.right)];
    const double log_one_minus_pi = l.log_d + r.log_d - node.log_d;
    const double recombined = log_sum_exp(node.log_pi + node.log_p_h1,
                                          log_one_minus_pi + l.log_p_tree + r.log_p_tree);
    CHECK(std::abs(node.log_p_tree - recombined) <= 1e-12);
    // the merged hypothesis is one summand of the tree probability
    CHECK(node.log_p_tree >= node.log_pi + node.log_p_h1 - 1e-12);
  }
}

TEST_CASE("identical inputs build identical trees") {
  std::mt19937 rng(31);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> data(10);
  for (double& v : data) v = normal(rng);
  const Dataset d = gaussian1d(data);
  const Prior prior = default_prior(d);

  const BhcTree t1 = build_tree(d, 1.0, prior);
  const BhcTree t2 = build_tree(d, 1.0, prior);
  REQUIRE(t1.nodes.size() == t2.nodes.size());
  CHECK(format_merge_trace(t1) == format_merge_trace(t2));
  CHECK(log_dpm_marginal_bhc(t1) == log_dpm_marginal_bhc(t2));
}

TEST_CASE("merge trace lists n-1 merges in creation order") {
  const Dataset d = Dataset::bernoulli({1, 1, 0, 0});
  const BhcTree tree = build_tree(d, 1.0, Prior::bernoulli(1.0, 1.0));
  const std::string trace = format_merge_trace(tree);
  int lines = 0;
  for (char c : trace) lines += c == '\n';
  CHECK(lines == 3);
  CHECK(trace.find("merge ") == 0);
  CHECK(trace.find("log_p_tree=") != std::string::npos);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(build_tree(Dataset::bernoulli({}), 1.0, Prior::bernoulli(1.0, 1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_tree(Dataset::bernoulli({1}), 0.0, Prior::bernoulli(1.0, 1.0)),
                  std::invalid_argument);
}

}  // TEST_SUITE
