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

#include "b2s/np_test.hpp"

#include <stdexcept>

#include "b2s/bhc.hpp"
#include "b2s/dpm_exact.hpp"
#include "b2s/parametric.hpp"
#include "b2s/partition.hpp"

namespace b2s {

std::string to_string(DpmBackend b) {
  return b == DpmBackend::exact ? "exact" : "bhc";
}

DpmBackend select_backend(int m1, int m2) {
  if (m1 + m2 < 1) {
    throw std::invalid_argument("select_backend: need at least one observation");
  }
  return m1 + m2 <= kMaxExactN ? DpmBackend::exact : DpmBackend::bhc;
}

namespace {

double dpm_marginal(const Dataset& data, double alpha, const Prior& prior,
                    DpmBackend backend) {
  if (backend == DpmBackend::exact) {
    return log_dpm_marginal_exact(data, alpha, prior);
  }
  return log_dpm_marginal_bhc(build_tree(data, alpha, prior));
}

}  // namespace

double log_bayes_factor_dpm(const Dataset& x, const Dataset& y, double alpha,
                            const Prior& prior, DpmBackend backend) {
  if (x.is_empty() && y.is_empty()) {
    throw std::invalid_argument("two-sample test: both samples are empty");
  }
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("DPM concentration alpha must be > 0");
  }
  // M(empty) = 0 and M(X u empty) = M(X): the factor collapses to 1.
  if (x.is_empty() || y.is_empty()) {
    Dataset::concat(x, y);  // still reject family/dimension mismatches
    return 0.0;
  }
  if (x.dimension() != y.dimension()) {
    throw std::invalid_argument("two-sample test: dimension mismatch (" +
                                std::to_string(x.dimension()) + " vs " +
                                std::to_string(y.dimension()) + ")");
  }
  if (backend == DpmBackend::exact && x.size() + y.size() > kMaxExactN) {
    throw std::invalid_argument("exact DPM backend caps at pooled size " +
                                std::to_string(kMaxExactN) + ", got " +
                                std::to_string(x.size() + y.size()));
  }

  const Dataset pooled = Dataset::concat(x, y).canonical();
  const Dataset cx = x.canonical();
  const Dataset cy = y.canonical();
  return dpm_marginal(cx, alpha, prior, backend) +
         dpm_marginal(cy, alpha, prior, backend) -
         dpm_marginal(pooled, alpha, prior, backend);
}

TestResult dpm_test(const Dataset& x, const Dataset& y, double alpha,
                    const Prior& prior, DpmBackend backend) {
  const double log_bf = log_bayes_factor_dpm(x, y, alpha, prior, backend);
  const Method method = backend == DpmBackend::exact ? Method::dpm_exact : Method::dpm_bhc;
  return TestResult{log_bf,     decide(log_bf), method,
                    x.family(), x.size(),       y.size(),
                    prior,      alpha,          backend == DpmBackend::bhc};
}

}  // namespace b2s
