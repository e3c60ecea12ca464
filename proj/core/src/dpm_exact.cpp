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

#include "b2s/dpm_exact.hpp"

#include <stdexcept>
#include <vector>

#include "b2s/numerics.hpp"

namespace b2s {

double log_dpm_marginal_exact(const Dataset& data, double alpha, const Prior& prior) {
  const int n = data.size();
  if (n < 1 || n > kMaxExactN) {
    throw std::invalid_argument("exact DPM marginal requires 1 <= n <= " +
                                std::to_string(kMaxExactN) + ", got " + std::to_string(n));
  }
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("DPM concentration alpha must be > 0");
  }

  // Blocks are subsets of {0..n-1}; precompute every subset's evidence once
  // so the partition sum is table lookups. Subset stats build incrementally
  // from the subset without its lowest element.
  std::vector<int> single(1);
  std::vector<SufficientStats> subset_stats(std::size_t{1} << n);
  std::vector<double> subset_evidence(std::size_t{1} << n, 0.0);
  for (int i = 0; i < n; ++i) {
    single[0] = i;
    subset_stats[std::size_t{1} << i] = suff_stats(data.select(single));
  }
  for (std::size_t mask = 1; mask < subset_stats.size(); ++mask) {
    if ((mask & (mask - 1)) != 0) {  // not a singleton
      const std::size_t low = mask & (~mask + 1);
      subset_stats[mask] = combine(subset_stats[mask ^ low], subset_stats[low]);
    }
    subset_evidence[mask] = log_marginal(subset_stats[mask], prior);
  }
  subset_stats.clear();
  subset_stats.shrink_to_fit();

  LogSumExpAccumulator total;
  std::vector<std::size_t> block_masks(static_cast<std::size_t>(n), 0);
  PartitionEnumerator part(n);
  do {
    const auto labels = part.assignment();
    const int blocks = part.num_blocks();
    for (int k = 0; k < blocks; ++k) block_masks[static_cast<std::size_t>(k)] = 0;
    for (int i = 0; i < n; ++i) {
      block_masks[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])] |= std::size_t{1} << i;
    }
    double term = log_crp_prior(part.block_sizes(), alpha);
    for (int k = 0; k < blocks; ++k) {
      term += subset_evidence[block_masks[static_cast<std::size_t>(k)]];
    }
    total.add(term);
  } while (part.advance());

  return total.value();
}

}  // namespace b2s
