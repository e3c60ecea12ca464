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

#include "b2s/partition.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace b2s {

Partition Partition::from_assignment(const std::vector<int>& labels) {
  Partition p;
  p.assignment.reserve(labels.size());
  std::unordered_map<int, int> relabel;
  for (int raw : labels) {
    if (raw < 0) throw std::invalid_argument("partition labels must be non-negative");
    auto [it, inserted] = relabel.emplace(raw, static_cast<int>(relabel.size()));
    const int label = it->second;
    p.assignment.push_back(label);
    if (inserted) p.block_sizes.push_back(0);
    ++p.block_sizes[static_cast<std::size_t>(label)];
  }
  return p;
}

PartitionEnumerator::PartitionEnumerator(int n) : n_(n) {
  if (n < 1 || n > kMaxExactN) {
    throw std::invalid_argument("partition enumeration requires 1 <= n <= " +
                                std::to_string(kMaxExactN) + ", got " + std::to_string(n));
  }
  labels_.assign(static_cast<std::size_t>(n), 0);
  prefix_max_.assign(static_cast<std::size_t>(n), 0);
  sizes_.assign(static_cast<std::size_t>(n), 0);
  recompute_sizes();
}

void PartitionEnumerator::recompute_sizes() {
  num_blocks_ = prefix_max_[static_cast<std::size_t>(n_ - 1)] + 1;
  for (int k = 0; k < num_blocks_; ++k) sizes_[static_cast<std::size_t>(k)] = 0;
  for (int i = 0; i < n_; ++i) ++sizes_[static_cast<std::size_t>(labels_[static_cast<std::size_t>(i)])];
}

bool PartitionEnumerator::advance() {
  // Rightmost position (excluding 0) whose label can still grow within the
  // restricted-growth constraint a[i] <= 1 + max(a[0..i-1]).
  int i = n_ - 1;
  while (i > 0 && labels_[static_cast<std::size_t>(i)] > prefix_max_[static_cast<std::size_t>(i - 1)]) {
    --i;
  }
  if (i == 0) return false;
  ++labels_[static_cast<std::size_t>(i)];
  prefix_max_[static_cast<std::size_t>(i)] =
      std::max(prefix_max_[static_cast<std::size_t>(i - 1)], labels_[static_cast<std::size_t>(i)]);
  for (int k = i + 1; k < n_; ++k) {
    labels_[static_cast<std::size_t>(k)] = 0;
    prefix_max_[static_cast<std::size_t>(k)] = prefix_max_[static_cast<std::size_t>(k - 1)];
  }
  recompute_sizes();
  return true;
}

Partition PartitionEnumerator::current() const {
  Partition p;
  p.assignment.assign(labels_.begin(), labels_.end());
  p.block_sizes.assign(sizes_.begin(), sizes_.begin() + num_blocks_);
  return p;
}

double log_crp_prior(std::span<const int> block_sizes, double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("CRP concentration alpha must be > 0");
  }
  double n = 0.0;
  double out = 0.0;
  for (int size : block_sizes) {
    out += std::log(alpha) + std::lgamma(static_cast<double>(size));
    n += static_cast<double>(size);
  }
  return out + std::lgamma(alpha) - std::lgamma(alpha + n);
}

double log_crp_prior(const Partition& p, double alpha) {
  return log_crp_prior(std::span<const int>(p.block_sizes), alpha);
}

}  // namespace b2s
