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

#include <cmath>
#include <limits>

namespace b2s {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log(exp(a) + exp(b)) without leaving log space.
inline double log_sum_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = a > b ? a : b;
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

/// Streaming log-sum-exp over a sequence of log-space terms.
/// Keeps a running maximum and rescales the partial sum when it grows.
class LogSumExpAccumulator {
 public:
  void add(double log_term) {
    if (log_term == kNegInf) return;
    if (log_term <= max_) {
      sum_ += std::exp(log_term - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    }
  }

  /// log of the accumulated sum; -inf if nothing was added.
  [[nodiscard]] double value() const {
    if (max_ == kNegInf) return kNegInf;
    return max_ + std::log(sum_);
  }

 private:
  double max_ = kNegInf;
  double sum_ = 0.0;
};

/// log B(a, b) = log Gamma(a) + log Gamma(b) - log Gamma(a + b)
inline double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

/// log of the multivariate gamma function,
/// Gamma_d(a) = pi^{d(d-1)/4} prod_{j=1..d} Gamma(a + (1 - j)/2)
inline double log_multigamma(double a, int d) {
  constexpr double kLogPi = 1.1447298858494001741;
  double out = 0.25 * d * (d - 1) * kLogPi;
  for (int j = 1; j <= d; ++j) {
    out += std::lgamma(a + 0.5 * (1.0 - j));
  }
  return out;
}

}  // namespace b2s
