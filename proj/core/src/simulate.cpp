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

#include "b2s/simulate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace b2s {

std::string to_string(Generator g) {
  switch (g) {
    case Generator::gaussian_shift: return "gaussian-shift";
    case Generator::gaussian_scale: return "gaussian-scale";
    case Generator::bernoulli_rate: return "bernoulli-rate";
    case Generator::mixture_vs_unimodal: return "mixture-vs-unimodal";
  }
  throw std::logic_error("unknown generator");
}

Generator generator_from_string(const std::string& s) {
  if (s == "gaussian-shift") return Generator::gaussian_shift;
  if (s == "gaussian-scale") return Generator::gaussian_scale;
  if (s == "bernoulli-rate") return Generator::bernoulli_rate;
  if (s == "mixture-vs-unimodal") return Generator::mixture_vs_unimodal;
  throw std::invalid_argument("unknown generator: " + s);
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  int bernoulli(double p) { return uniform01() < p ? 1 : 0; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

Eigen::MatrixXd gaussian_block(Sampler& rng, int rows, int dim, double mean, double sd) {
  Eigen::MatrixXd out(rows, dim);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < dim; ++j) out(i, j) = mean + sd * rng.normal();
  }
  return out;
}

}  // namespace

std::pair<Dataset, Dataset> simulate(const SimulationConfig& config) {
  if (config.m1 < 1 || config.m2 < 1) {
    throw std::invalid_argument("simulate: sample sizes must be >= 1");
  }
  Sampler rng(config.seed);

  switch (config.generator) {
    case Generator::gaussian_shift: {
      if (config.dim < 1) throw std::invalid_argument("simulate: dim must be >= 1");
      Eigen::MatrixXd x = gaussian_block(rng, config.m1, config.dim, 0.0, 1.0);
      Eigen::MatrixXd y = gaussian_block(rng, config.m2, config.dim, config.shift, 1.0);
      return {Dataset::gaussian(std::move(x)), Dataset::gaussian(std::move(y))};
    }
    case Generator::gaussian_scale: {
      if (config.dim < 1) throw std::invalid_argument("simulate: dim must be >= 1");
      if (!(config.scale > 0.0)) throw std::invalid_argument("simulate: scale must be > 0");
      Eigen::MatrixXd x = gaussian_block(rng, config.m1, config.dim, 0.0, 1.0);
      Eigen::MatrixXd y = gaussian_block(rng, config.m2, config.dim, 0.0, config.scale);
      return {Dataset::gaussian(std::move(x)), Dataset::gaussian(std::move(y))};
    }
    case Generator::bernoulli_rate: {
      if (config.p1 < 0.0 || config.p1 > 1.0 || config.p2 < 0.0 || config.p2 > 1.0) {
        throw std::invalid_argument("simulate: rates must lie in [0, 1]");
      }
      std::vector<int> x(static_cast<std::size_t>(config.m1));
      std::vector<int> y(static_cast<std::size_t>(config.m2));
      for (int& v : x) v = rng.bernoulli(config.p1);
      for (int& v : y) v = rng.bernoulli(config.p2);
      return {Dataset::bernoulli(std::move(x)), Dataset::bernoulli(std::move(y))};
    }
    case Generator::mixture_vs_unimodal: {
      if (config.dim != 1) {
        throw std::invalid_argument("simulate: mixture-vs-unimodal is 1-D only");
      }
      Eigen::MatrixXd x(config.m1, 1);
      for (int i = 0; i < config.m1; ++i) {
        const double center = rng.uniform01() < 0.5 ? -2.0 : 2.0;
        x(i, 0) = center + rng.normal();
      }
      // Y matches X's mean (0) and variance (1 + 2^2 = 5) with one mode.
      Eigen::MatrixXd y = gaussian_block(rng, config.m2, 1, 0.0, std::sqrt(5.0));
      return {Dataset::gaussian(std::move(x)), Dataset::gaussian(std::move(y))};
    }
  }
  throw std::logic_error("unknown generator");
}

}  // namespace b2s
