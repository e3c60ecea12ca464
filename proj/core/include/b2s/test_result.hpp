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

#include <optional>
#include <string>

#include "b2s/exp_family.hpp"

namespace b2s {

enum class Decision { h0_same, h1_different };
enum class Method { parametric, dpm_exact, dpm_bhc };

std::string to_string(Decision d);
std::string to_string(Method m);

/// H1 iff the Bayes factor exceeds 1, i.e. log_bf > 0; a tie decides H0.
/// Throws on non-finite input.
Decision decide(double log_bf);

/// Outcome of one two-sample test.
struct TestResult {
  double log_bayes_factor = 0.0;
  Decision decision = Decision::h0_same;
  Method method = Method::parametric;
  Family family = Family::bernoulli;
  int m1 = 0;
  int m2 = 0;
  Prior prior = Prior::bernoulli(1.0, 1.0);
  std::optional<double> alpha;  // DPM concentration, nonparametric methods only
  // BHC replaces each of the three DPM marginals with a lower bound, so the
  // combined Bayes factor carries no bound guarantee of its own.
  bool approximate = false;
};

}  // namespace b2s
