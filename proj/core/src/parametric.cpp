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

#include "b2s/parametric.hpp"

#include <cmath>
#include <stdexcept>

namespace b2s {

std::string to_string(Decision d) {
  return d == Decision::h0_same ? "H0_same" : "H1_different";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::parametric: return "parametric";
    case Method::dpm_exact: return "dpm_exact";
    case Method::dpm_bhc: return "dpm_bhc";
  }
  throw std::logic_error("unknown method");
}

Decision decide(double log_bf) {
  if (!std::isfinite(log_bf)) {
    throw std::invalid_argument("decide: log Bayes factor must be finite");
  }
  return log_bf > 0.0 ? Decision::h1_different : Decision::h0_same;
}

double log_bayes_factor_parametric(const Dataset& x, const Dataset& y,
                                   const Prior& prior) {
  if (x.is_empty() && y.is_empty()) {
    throw std::invalid_argument("two-sample test: both samples are empty");
  }
  const SufficientStats sx = suff_stats(x);
  const SufficientStats sy = suff_stats(y);
  return log_marginal(sx, prior) + log_marginal(sy, prior) -
         log_marginal(combine(sx, sy), prior);
}

TestResult parametric_test(const Dataset& x, const Dataset& y, const Prior& prior) {
  const double log_bf = log_bayes_factor_parametric(x, y, prior);
  return TestResult{log_bf,     decide(log_bf), Method::parametric,
                    x.family(), x.size(),       y.size(),
                    prior,      std::nullopt,   false};
}

}  // namespace b2s
