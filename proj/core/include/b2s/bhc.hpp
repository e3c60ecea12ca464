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

#include <string>
#include <vector>

#include "b2s/dataset.hpp"
#include "b2s/exp_family.hpp"

namespace b2s {

/// One node of a BHC merge tree. Log-space quantities of the recursion:
///   d_k  = alpha Gamma(n_k) + d_i d_j          (leaves: d = alpha)
///   pi_k = alpha Gamma(n_k) / d_k              (leaves: pi = 1)
///   p(D_k|T_k) = pi_k p(D_k|H1)
///              + (1 - pi_k) p(D_i|T_i) p(D_j|T_j)
struct BhcNode {
  int left = -1;   // child node ids, -1 for leaves
  int right = -1;
  std::vector<int> members;  // sorted dataset indices
  SufficientStats stats;
  double log_p_h1 = 0.0;    // evidence of all members as one cluster
  double log_p_tree = 0.0;  // log p(D_k | T_k)
  double log_d = 0.0;       // recursion normalizer d_k
  double log_pi = 0.0;      // merge prior pi_k
};

/// Binary merge tree over a dataset. Nodes 0..n-1 are the leaves in dataset
/// order; internal nodes follow in merge order, the root last.
struct BhcTree {
  std::vector<BhcNode> nodes;
  int root = -1;
  double alpha = 1.0;
  int data_size = 0;

  [[nodiscard]] const BhcNode& root_node() const { return nodes[static_cast<std::size_t>(root)]; }
};

/// Greedy Bayesian hierarchical clustering. Starts from singleton leaves and
/// performs exactly n-1 merges, each time picking the candidate pair with the
/// highest posterior merge probability r = pi_k p(D_k|H1) / p(D_k|T_k); ties
/// fall to the lexicographically lowest (i, j) node-id pair. Candidate
/// evidences are cached so construction costs O(n^2) evidence evaluations.
BhcTree build_tree(const Dataset& data, double alpha, const Prior& prior);

/// Lower bound on the exact DPM log marginal: the partition sum restricted
/// to the tree-consistent subset, i.e. root log p(D|T) rescaled by the
/// tree-consistent share of CRP mass. Tight at n <= 2, where the two root
/// hypotheses enumerate every partition.
double log_dpm_marginal_bhc(const BhcTree& tree);

/// Structural check: every internal node's member set is the disjoint union
/// of its children's, and the root covers all indices exactly once.
bool validate_tree(const BhcTree& tree);

/// Line-oriented dump of the merge sequence with per-node log quantities,
/// for regression testing.
std::string format_merge_trace(const BhcTree& tree);

}  // namespace b2s
