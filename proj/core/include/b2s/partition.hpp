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

#pragma once

#include <span>
#include <vector>

namespace b2s {

/// Exact partition sums are limited to n <= 12 (Bell(12) ~ 4.2e6 terms).
inline constexpr int kMaxExactN = 12;

/// A set partition of {0..n-1} in restricted-growth form: element 0 carries
/// label 0 and each first occurrence of a new label exceeds the previous
/// maximum by exactly one.
struct Partition {
  std::vector<int> assignment;
  std::vector<int> block_sizes;

  /// Canonicalizes an arbitrary label vector by relabeling blocks in order
  /// of first occurrence. Throws on negative labels.
  static Partition from_assignment(const std::vector<int>& labels);
};

/// Enumerates every set partition of {0..n-1} exactly once, in lexicographic
/// order of the restricted-growth strings. Starts positioned on the first
/// partition (all elements in one block).
///
///   PartitionEnumerator e(n);
///   do { use(e.assignment(), e.block_sizes()); } while (e.advance());
class PartitionEnumerator {
 public:
  /// Throws unless 1 <= n <= kMaxExactN.
  explicit PartitionEnumerator(int n);

  [[nodiscard]] std::span<const int> assignment() const { return labels_; }
  [[nodiscard]] std::span<const int> block_sizes() const {
    return {sizes_.data(), static_cast<std::size_t>(num_blocks_)};
  }
  [[nodiscard]] int num_blocks() const { return num_blocks_; }
  [[nodiscard]] Partition current() const;

  /// Steps to the next partition; false once all have been visited.
  bool advance();

 private:
  void recompute_sizes();

  int n_;
  std::vector<int> labels_;      // restricted-growth string
  std::vector<int> prefix_max_;  // max label over labels_[0..i]
  std::vector<int> sizes_;
  int num_blocks_ = 1;
};

/// Chinese-restaurant-process log probability of a partition:
///   log p(v | alpha) = K log alpha + sum_k log Gamma(n_k)
///                      + log Gamma(alpha) - log Gamma(alpha + n).
/// The exponentials over all partitions of n sum to one.
double log_crp_prior(const Partition& p, double alpha);

/// Same, from block sizes alone (the CRP probability depends on nothing else).
double log_crp_prior(std::span<const int> block_sizes, double alpha);

}  // namespace b2s
