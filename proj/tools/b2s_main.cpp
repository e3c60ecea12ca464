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

// Command-line front end. Two subcommands:
//
//   b2s test      run a two-sample test on two CSV files, JSON report on
//                 stdout; exit 0 = H0_same, 1 = H1_different, 2 = error
//   b2s simulate  write a synthetic dataset pair as two CSV files
//
// A short human-readable summary goes to stderr so stdout stays parseable.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "b2s/csv.hpp"
#include "b2s/np_test.hpp"
#include "b2s/parametric.hpp"
#include "b2s/report.hpp"
#include "b2s/simulate.hpp"
#include "b2s/version.hpp"

namespace {

constexpr int kExitH0 = 0;
constexpr int kExitH1 = 1;
constexpr int kExitError = 2;

struct TestOptions {
  std::string x_path;
  std::string y_path;
  std::string method = "parametric";
  std::string family;
  std::string backend = "auto";
  double alpha = 1.0;
  std::string prior_source = "default";
  std::string prior_file;
  double log_prior_odds = 0.0;
  bool no_header = false;
};

struct SimulateOptions {
  std::string generator;
  int dim = 1;
  int m = 0;
  int m1 = 0;
  int m2 = 0;
  double shift = 0.0;
  double scale = 1.0;
  double p1 = 0.5;
  double p2 = 0.5;
  std::uint64_t seed = 0;
  std::string out_x = "x.csv";
  std::string out_y = "y.csv";
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_test(const TestOptions& opt) {
  const b2s::Family family = b2s::family_from_string(opt.family);
  const b2s::ColumnKind kind = b2s::kind_for_family(family);
  const b2s::HeaderMode header =
      opt.no_header ? b2s::HeaderMode::none : b2s::HeaderMode::autodetect;

  b2s::DatasetFile fx = b2s::load_csv(opt.x_path, kind, header);
  b2s::DatasetFile fy = b2s::load_csv(opt.y_path, kind, header);

  b2s::Dataset x = fx.data;
  b2s::Dataset y = fy.data;
  if (family == b2s::Family::multinomial) {
    // Category arity is inferred per file; the test needs one shared arity.
    const int arity = std::max(x.dimension(), y.dimension());
    x = b2s::Dataset::categorical(x.int_values(), arity);
    y = b2s::Dataset::categorical(y.int_values(), arity);
  }
  if (family == b2s::Family::gaussian && x.dimension() != y.dimension()) {
    throw std::runtime_error("dimension mismatch: " + opt.x_path + " has dimension " +
                             std::to_string(x.dimension()) + ", " + opt.y_path +
                             " has dimension " + std::to_string(y.dimension()));
  }

  if (opt.prior_source == "file" && opt.prior_file.empty()) {
    throw std::runtime_error("--prior file requires --prior-file <path>");
  }
  const b2s::Prior prior =
      opt.prior_source == "file"
          ? b2s::prior_from_json(slurp(opt.prior_file), family)
          : b2s::default_prior(b2s::Dataset::concat(x, y));

  const auto started = std::chrono::steady_clock::now();
  b2s::TestResult result = [&] {
    if (opt.method == "parametric") {
      return b2s::parametric_test(x, y, prior);
    }
    b2s::DpmBackend backend;
    if (opt.backend == "auto") {
      backend = b2s::select_backend(x.size(), y.size());
    } else if (opt.backend == "exact") {
      backend = b2s::DpmBackend::exact;
    } else {
      backend = b2s::DpmBackend::bhc;
    }
    return b2s::dpm_test(x, y, opt.alpha, prior, backend);
  }();
  const auto finished = std::chrono::steady_clock::now();

  result.log_bayes_factor += opt.log_prior_odds;
  result.decision = b2s::decide(result.log_bayes_factor);

  b2s::ReportRecord record;
  record.tool = b2s::kToolName;
  record.version = b2s::kVersion;
  record.method = result.method;
  if (result.method != b2s::Method::parametric) {
    record.backend = result.method == b2s::Method::dpm_exact ? b2s::DpmBackend::exact
                                                             : b2s::DpmBackend::bhc;
  }
  record.family = family;
  record.alpha = result.alpha;
  record.log_prior_odds = opt.log_prior_odds;
  record.input_x = {fx.path, fx.rows, x.dimension()};
  record.input_y = {fy.path, fy.rows, y.dimension()};
  record.prior = prior;
  record.log_bayes_factor = result.log_bayes_factor;
  record.decision = result.decision;
  record.approximate = result.approximate;
  record.duration_ms =
      std::chrono::duration<double, std::milli>(finished - started).count();

  std::cout << b2s::to_json(record);
  std::cerr << "method=" << b2s::to_string(result.method)
            << " family=" << b2s::to_string(family) << " m1=" << result.m1
            << " m2=" << result.m2 << " log_bf=" << result.log_bayes_factor << " -> "
            << b2s::to_string(result.decision) << "\n";

  return result.decision == b2s::Decision::h1_different ? kExitH1 : kExitH0;
}

int run_simulate(const SimulateOptions& opt) {
  b2s::SimulationConfig config;
  config.generator = b2s::generator_from_string(opt.generator);
  config.dim = opt.dim;
  config.m1 = opt.m1 > 0 ? opt.m1 : opt.m;
  config.m2 = opt.m2 > 0 ? opt.m2 : opt.m;
  config.shift = opt.shift;
  config.scale = opt.scale;
  config.p1 = opt.p1;
  config.p2 = opt.p2;
  config.seed = opt.seed;
  if (config.m1 < 1 || config.m2 < 1) {
    throw std::runtime_error("simulate: give --m or both --m1 and --m2");
  }

  const auto [x, y] = b2s::simulate(config);
  b2s::write_csv(opt.out_x, x);
  b2s::write_csv(opt.out_y, y);
  std::cerr << "wrote " << x.size() << " rows to " << opt.out_x << " and " << y.size()
            << " rows to " << opt.out_y << " (generator=" << opt.generator
            << " seed=" << opt.seed << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian two-sample tests: parametric conjugate-exponential and "
               "nonparametric Dirichlet-process-mixture Bayes factors"};
  app.set_version_flag("--version", std::string(b2s::kToolName) + " " + b2s::kVersion);
  app.require_subcommand(1);

  TestOptions test_opt;
  CLI::App* test = app.add_subcommand("test", "decide whether two samples share a distribution");
  test->add_option("x", test_opt.x_path, "CSV file with sample X")->required();
  test->add_option("y", test_opt.y_path, "CSV file with sample Y")->required();
  test->add_option("--method", test_opt.method, "test family")
      ->check(CLI::IsMember({"parametric", "dpm"}))
      ->capture_default_str();
  test->add_option("--family", test_opt.family, "model family")
      ->check(CLI::IsMember({"gaussian", "bernoulli", "multinomial", "poisson"}))
      ->required();
  test->add_option("--backend", test_opt.backend, "DPM marginal backend")
      ->check(CLI::IsMember({"exact", "bhc", "auto"}))
      ->capture_default_str();
  test->add_option("--alpha", test_opt.alpha, "DPM concentration parameter")
      ->capture_default_str();
  test->add_option("--prior", test_opt.prior_source, "prior source")
      ->check(CLI::IsMember({"default", "file"}))
      ->capture_default_str();
  test->add_option("--prior-file", test_opt.prior_file,
                   "JSON file with family-native hyperparameters");
  test->add_option("--log-prior-odds", test_opt.log_prior_odds,
                   "offset added to the log Bayes factor before deciding")
      ->capture_default_str();
  test->add_flag("--no-header", test_opt.no_header,
                 "treat the first CSV line as data, never as a header");

  SimulateOptions sim_opt;
  CLI::App* simulate = app.add_subcommand("simulate", "write a synthetic dataset pair");
  simulate
      ->add_option("generator", sim_opt.generator,
                   "gaussian-shift | gaussian-scale | bernoulli-rate | mixture-vs-unimodal")
      ->required();
  simulate->add_option("--dim", sim_opt.dim, "dimension (gaussian generators)")
      ->capture_default_str();
  simulate->add_option("--m", sim_opt.m, "rows per sample");
  simulate->add_option("--m1", sim_opt.m1, "rows in X (overrides --m)");
  simulate->add_option("--m2", sim_opt.m2, "rows in Y (overrides --m)");
  simulate->add_option("--shift", sim_opt.shift, "mean shift of Y (gaussian-shift)")
      ->capture_default_str();
  simulate->add_option("--scale", sim_opt.scale, "stddev scale of Y (gaussian-scale)")
      ->capture_default_str();
  simulate->add_option("--p1", sim_opt.p1, "rate of X (bernoulli-rate)")
      ->capture_default_str();
  simulate->add_option("--p2", sim_opt.p2, "rate of Y (bernoulli-rate)")
      ->capture_default_str();
  simulate->add_option("--seed", sim_opt.seed, "RNG seed")->required();
  simulate->add_option("--out-x", sim_opt.out_x, "output CSV for X")->capture_default_str();
  simulate->add_option("--out-y", sim_opt.out_y, "output CSV for Y")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitError;
  }

  try {
    if (*test) return run_test(test_opt);
    return run_simulate(sim_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
