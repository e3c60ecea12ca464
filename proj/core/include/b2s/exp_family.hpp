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

#include <Eigen/Core>
#include <variant>

#include "b2s/dataset.hpp"

namespace b2s {

// Conjugate-exponential machinery. Each family writes its likelihood as
// f(x) g(theta) exp(theta' u(x)) with conjugate prior
// h(eta, nu) g(theta)^eta exp(theta' nu); a dataset enters the evidence only
// through the count n and the summed statistics u(D). Priors are kept in
// family-native form rather than raw (eta, nu):
//
//   gaussian     Normal-inverse-Wishart (mu0, kappa0, nu0, lambda0);
//                eta <-> kappa0/nu0, nu <-> (kappa0 mu0, lambda0 + ...)
//   bernoulli    Beta(a, b);            eta <-> a + b - 2, nu <-> a - 1
//   multinomial  Dirichlet(alpha_j);    nu_j <-> alpha_j - 1
//   poisson      Gamma(a, b) shape/rate; eta <-> b, nu <-> a - 1
//
// All evidence arithmetic is done in log space via log-Gamma.

/// Additive accumulator of a dataset: count n plus the family's summed
/// sufficient statistics u(D), flattened into one vector.
///
///   gaussian (d)     u = [ sum x (d) ; vec(sum x x') (d*d) ]
///   bernoulli        u = [ sum x ]
///   multinomial (K)  u = per-category counts (K)
///   poisson          u = [ sum x, sum log(x!) ]
struct SufficientStats {
  Family family = Family::bernoulli;
  int dimension = 1;  // d for gaussian, arity for multinomial, 1 otherwise
  long n = 0;
  Eigen::VectorXd u;
};

struct NiwParams {
  Eigen::VectorXd mu0;
  double kappa0 = 1.0;
  double nu0 = 1.0;
  Eigen::MatrixXd lambda0;
  double log_det_lambda0 = 0.0;  // cached by Prior construction
};

struct BetaParams {
  double a = 1.0;
  double b = 1.0;
};

struct DirichletParams {
  Eigen::VectorXd alpha;
};

struct GammaParams {
  double a = 1.0;  // shape
  double b = 1.0;  // rate
};

/// One of the four conjugate priors, validated at construction
/// (positivity, nu0 > d - 1, lambda0 symmetric positive definite).
class Prior {
 public:
  static Prior gaussian(Eigen::VectorXd mu0, double kappa0, double nu0,
                        Eigen::MatrixXd lambda0);
  static Prior bernoulli(double a, double b);
  static Prior multinomial(Eigen::VectorXd alpha);
  static Prior poisson(double a, double b);

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] int dimension() const;

  [[nodiscard]] const NiwParams& niw() const;
  [[nodiscard]] const BetaParams& beta() const;
  [[nodiscard]] const DirichletParams& dirichlet() const;
  [[nodiscard]] const GammaParams& gamma() const;

 private:
  Prior(Family f, std::variant<NiwParams, BetaParams, DirichletParams, GammaParams> p)
      : family_(f), params_(std::move(p)) {}

  Family family_;
  std::variant<NiwParams, BetaParams, DirichletParams, GammaParams> params_;
};

/// u(D): exact accumulator of a dataset. Empty input gives (n=0, zeros).
/// Contributions are accumulated in canonical row order, so permuting the
/// dataset yields bit-identical stats.
SufficientStats suff_stats(const Dataset& data);

/// Componentwise sum of two accumulators; commutative and associative.
/// Throws on family or dimension mismatch.
SufficientStats combine(const SufficientStats& s1, const SufficientStats& s2);

/// Closed-form log marginal likelihood log p(D | prior), the log of
/// integral of prod_i p(x_i | theta) p(theta | prior) dtheta. Returns exactly
/// 0 for n = 0. Throws if the NIW posterior scale matrix loses positive
/// definiteness (numerical failure is reported, never patched).
double log_marginal(const SufficientStats& stats, const Prior& prior);

/// sum_i log f(x_i), the base-measure part of log_marginal. Subtracting it
/// leaves the pure log h-ratio; the difference cancels in Bayes factors.
double log_base_measure(const SufficientStats& stats);

/// Deterministic weakly-informative prior from pooled data:
/// NIW(pooled mean, 1, d + 2, ridge-regularized pooled covariance),
/// Beta(1,1), Dirichlet(1,...,1), Gamma(1,1).
Prior default_prior(const Dataset& pooled);

}  // namespace b2s
