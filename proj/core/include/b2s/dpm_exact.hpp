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

#include "b2s/dataset.hpp"
#include "b2s/exp_family.hpp"
#include "b2s/partition.hpp"

namespace b2s {

/// Exact Dirichlet-process-mixture log marginal likelihood by summing over
/// every partition of the data:
///   log sum_v exp( log_crp_prior(v, alpha) + sum_blocks log_marginal(block) ).
/// Every block shares the same base-measure prior. Ground truth for the BHC
/// bound; requires 1 <= |D| <= kMaxExactN and errors beyond the cap instead
/// of degrading to an approximation.
double log_dpm_marginal_exact(const Dataset& data, double alpha, const Prior& prior);

}  // namespace b2s
