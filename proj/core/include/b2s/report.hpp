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

#include "b2s/np_test.hpp"
#include "b2s/test_result.hpp"

namespace b2s {

struct InputSummary {
  std::string path;
  int rows = 0;
  int dimension = 0;
};

/// Machine-readable record of one test run. Serialization is lossless and,
/// for a fixed record, byte-identical; duration_ms is the one field expected
/// to vary between otherwise identical runs.
struct ReportRecord {
  std::string tool;
  std::string version;
  Method method = Method::parametric;
  std::optional<DpmBackend> backend;  // nonparametric runs only
  Family family = Family::bernoulli;
  std::optional<double> alpha;
  double log_prior_odds = 0.0;
  InputSummary input_x;
  InputSummary input_y;
  Prior prior = Prior::bernoulli(1.0, 1.0);
  double log_bayes_factor = 0.0;
  Decision decision = Decision::h0_same;
  bool approximate = false;
  double duration_ms = 0.0;
};

/// One JSON object with a fixed key order, terminated by a newline.
std::string to_json(const ReportRecord& record);

/// Inverse of to_json; throws std::runtime_error on malformed input.
ReportRecord report_from_json(const std::string& json_text);

/// Prior serialization, shared by report echo and --prior-file parsing.
/// Keys are family-native: {mu0, kappa0, nu0, lambda0}, {a, b}, {alpha}.
std::string prior_to_json(const Prior& prior);

/// Parses a prior for `family` from a JSON object. An optional "family" key
/// must agree with the argument. Constraint violations surface as the usual
/// Prior construction errors.
Prior prior_from_json(const std::string& json_text, Family family);

}  // namespace b2s
