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

// Independent brute-force oracles:
//  - Bell numbers from the Bell-triangle recurrence
//  - set partitions by recursive block assignment (not restricted-growth
//    successor stepping, so enumeration bugs cannot cancel out)
//  - DPM marginals assembled from those partitions with evidences written
//    out directly in lgamma arithmetic

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace oracle {

inline std::uint64_t bell_number(int n) {
  // Bell triangle: row r starts with the last entry of row r-1; each entry
  // adds its left neighbour and the entry above it.
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

/// Calls fn(labels) once per set partition of {0..n-1}, labels in
/// first-occurrence order.
inline void for_each_partition_recursive(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  const std::function<void(int, int)> recurse = [&](int i, int used) {
    if (i == n) {
      fn(labels);
      return;
    }
    for (int block = 0; block <= used; ++block) {
      labels[static_cast<std::size_t>(i)] = block;
      recurse(i + 1, block == used ? used + 1 : used);
    }
  };
  recurse(0, 0);
}

/// Beta-Bernoulli evidence written out directly.
inline double beta_bernoulli_evidence_log(int n, int ones, double a, double b) {
  const auto lbeta = [](double p, double q) {
    return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
  };
  return lbeta(a + ones, b + n - ones) - lbeta(a, b);
}

/// CRP partition probability written out directly.
inline double crp_log_prob(const std::vector<int>& block_sizes, double alpha) {
  double out = std::lgamma(alpha);
  int n = 0;
  for (int size : block_sizes) {
    out += std::log(alpha) + std::lgamma(static_cast<double>(size));
    n += size;
  }
  return out - std::lgamma(alpha + n);
}

/// Exact DPM log marginal by recursive partition enumeration and an
/// arbitrary per-block evidence callback (indices of one block in).
inline double dpm_marginal_brute(int n, double alpha,
                                 const std::function<double(const std::vector<int>&)>& block_log_evidence) {
  double max_term = -std::numeric_limits<double>::infinity();
  std::vector<double> terms;
  for_each_partition_recursive(n, [&](const std::vector<int>& labels) {
    int blocks = 0;
    for (int l : labels) blocks = std::max(blocks, l + 1);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(blocks));
    std::vector<int> size(static_cast<std::size_t>(blocks), 0);
    for (int i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(labels[static_cast<std::size_t>(i)]);
      members[k].push_back(i);
      ++size[k];
    }
    double term = crp_log_prob(size, alpha);
    for (const auto& block : members) term += block_log_evidence(block);
    terms.push_back(term);
    max_term = std::max(max_term, term);
  });
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - max_term);
  return max_term + std::log(sum);
}

/// Exact Bernoulli DPM log marginal, evidences written out directly.
inline double dpm_marginal_bernoulli_brute(std::span<const int> data, double alpha,
                                           double a, double b) {
  return dpm_marginal_brute(
      static_cast<int>(data.size()), alpha, [&](const std::vector<int>& block) {
        int ones = 0;
        for (int i : block) ones += data[static_cast<std::size_t>(i)];
        return beta_bernoulli_evidence_log(static_cast<int>(block.size()), ones, a, b);
      });
}

}  // namespace oracle
