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
#include "b2s/test_result.hpp"

namespace b2s {

/// Parametric two-sample log Bayes factor,
///   log p(X | prior) + log p(Y | prior) - log p(X, Y | prior),
/// with the joint marginal evaluated on the combined sufficient statistics.
/// The same prior governs all three marginals. One sample may be empty
/// (the result is then exactly 0); both empty is an error.
double log_bayes_factor_parametric(const Dataset& x, const Dataset& y,
                                   const Prior& prior);

/// log_bayes_factor_parametric plus the decision and run metadata.
TestResult parametric_test(const Dataset& x, const Dataset& y, const Prior& prior);

}  // namespace b2s
