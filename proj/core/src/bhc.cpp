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

#include "b2s/bhc.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "b2s/numerics.hpp"

namespace b2s {

namespace {

struct Candidate {
  int i = -1;  // node ids, i < j
  int j = -1;
  SufficientStats stats;
  double log_p_h1 = 0.0;
  double log_d = 0.0;
  double log_pi = 0.0;
  double log_p_tree = 0.0;
  double log_r = 0.0;
};

Candidate make_candidate(int i, int j, const std::vector<BhcNode>& nodes,
                         double log_alpha, const Prior& prior) {
  if (i > j) std::swap(i, j);
  const BhcNode& a = nodes[static_cast<std::size_t>(i)];
  const BhcNode& b = nodes[static_cast<std::size_t>(j)];

  Candidate c;
  c.i = i;
  c.j = j;
  c.stats = combine(a.stats, b.stats);
  c.log_p_h1 = log_marginal(c.stats, prior);

  const double log_gamma_nk = log_alpha + std::lgamma(static_cast<double>(c.stats.n));
  c.log_d = log_sum_exp(log_gamma_nk, a.log_d + b.log_d);
  c.log_pi = log_gamma_nk - c.log_d;
  // 1 - pi_k = d_i d_j / d_k, so both mixture weights stay in log space.
  const double log_one_minus_pi = a.log_d + b.log_d - c.log_d;
  c.log_p_tree = log_sum_exp(c.log_pi + c.log_p_h1,
                             log_one_minus_pi + a.log_p_tree + b.log_p_tree);
  c.log_r = c.log_pi + c.log_p_h1 - c.log_p_tree;
  return c;
}

}  // namespace

BhcTree build_tree(const Dataset& data, double alpha, const Prior& prior) {
  const int n = data.size();
  if (n < 1) throw std::invalid_argument("BHC requires a non-empty dataset");
  if (!(alpha > 0.0)) throw std::invalid_argument("BHC concentration alpha must be > 0");
  const double log_alpha = std::log(alpha);

  BhcTree tree;
  tree.alpha = alpha;
  tree.data_size = n;
  tree.nodes.reserve(static_cast<std::size_t>(2 * n - 1));

  std::vector<int> single(1);
  for (int i = 0; i < n; ++i) {
    single[0] = i;
    BhcNode leaf;
    leaf.members = {i};
    leaf.stats = suff_stats(data.select(single));
    leaf.log_p_h1 = log_marginal(leaf.stats, prior);
    leaf.log_p_tree = leaf.log_p_h1;
    leaf.log_d = log_alpha;
    leaf.log_pi = 0.0;
    tree.nodes.push_back(std::move(leaf));
  }
  if (n == 1) {
    tree.root = 0;
    return tree;
  }

  std::vector<int> active(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;

  std::vector<Candidate> candidates;
  candidates.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      candidates.push_back(make_candidate(a, b, tree.nodes, log_alpha, prior));
    }
  }

  while (active.size() > 1) {
    // Highest merge posterior wins; exact ties fall to the lowest (i, j).
    std::size_t best = 0;
    for (std::size_t c = 1; c < candidates.size(); ++c) {
      const bool better =
          candidates[c].log_r > candidates[best].log_r ||
          (candidates[c].log_r == candidates[best].log_r &&
           std::pair{candidates[c].i, candidates[c].j} < std::pair{candidates[best].i, candidates[best].j});
      if (better) best = c;
    }
    const Candidate chosen = candidates[best];

    BhcNode merged;
    merged.left = chosen.i;
    merged.right = chosen.j;
    const auto& mi = tree.nodes[static_cast<std::size_t>(chosen.i)].members;
    const auto& mj = tree.nodes[static_cast<std::size_t>(chosen.j)].members;
    merged.members.resize(mi.size() + mj.size());
    std::merge(mi.begin(), mi.end(), mj.begin(), mj.end(), merged.members.begin());
    merged.stats = chosen.stats;
    merged.log_p_h1 = chosen.log_p_h1;
    merged.log_p_tree = chosen.log_p_tree;
    merged.log_d = chosen.log_d;
    merged.log_pi = chosen.log_pi;
    const int merged_id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(std::move(merged));

    std::erase_if(candidates, [&](const Candidate& c) {
      return c.i == chosen.i || c.i == chosen.j || c.j == chosen.i || c.j == chosen.j;
    });
    std::erase_if(active, [&](int id) { return id == chosen.i || id == chosen.j; });
    for (int other : active) {
      candidates.push_back(make_candidate(other, merged_id, tree.nodes, log_alpha, prior));
    }
    active.push_back(merged_id);
  }

  tree.root = active.front();
  return tree;
}

double log_dpm_marginal_bhc(const BhcTree& tree) {
  if (tree.root < 0) throw std::invalid_argument("BHC tree has no root");
  // p(D|T) averages p(D|v) over tree-consistent partitions with weights
  // normalized by d_root. Scaling by the tree-consistent share of the full
  // CRP mass, d_root Gamma(alpha) / Gamma(alpha + n), turns it into the
  // partial partition sum, which is bounded by the exact marginal term by
  // term. The factor is exactly 1 at n <= 2, where every partition is
  // tree-consistent.
  const BhcNode& root = tree.root_node();
  return root.log_p_tree + root.log_d + std::lgamma(tree.alpha) -
         std::lgamma(tree.alpha + static_cast<double>(tree.data_size));
}

bool validate_tree(const BhcTree& tree) {
  if (tree.root < 0 || tree.nodes.empty()) return false;
  for (const BhcNode& node : tree.nodes) {
    if (!std::is_sorted(node.members.begin(), node.members.end())) return false;
    if ((node.left < 0) != (node.right < 0)) return false;
    if (node.left < 0) {
      if (node.members.size() != 1) return false;
      continue;
    }
    const auto& mi = tree.nodes[static_cast<std::size_t>(node.left)].members;
    const auto& mj = tree.nodes[static_cast<std::size_t>(node.right)].members;
    std::vector<int> expect(mi.size() + mj.size());
    std::merge(mi.begin(), mi.end(), mj.begin(), mj.end(), expect.begin());
    if (expect != node.members ||
        std::adjacent_find(expect.begin(), expect.end()) != expect.end()) {
      return false;
    }
  }
  const auto& root_members = tree.root_node().members;
  if (static_cast<int>(root_members.size()) != tree.data_size) return false;
  for (int i = 0; i < tree.data_size; ++i) {
    if (root_members[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

std::string format_merge_trace(const BhcTree& tree) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
    const BhcNode& node = tree.nodes[k];
    if (node.left < 0) continue;
    out << "merge " << node.left << " " << node.right << " -> " << k
        << " n=" << node.members.size() << " log_pi=" << node.log_pi
        << " log_p_h1=" << node.log_p_h1 << " log_p_tree=" << node.log_p_tree << "\n";
  }
  return out.str();
}

}  // namespace b2s
