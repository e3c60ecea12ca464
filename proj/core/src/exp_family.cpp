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

#include "b2s/exp_family.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

#include "b2s/numerics.hpp"

namespace b2s {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kLn2 = 0.69314718055994530942;

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

/// log normalizer of the NIW distribution with parameters (kappa, nu, lambda):
/// log Z = (nu d / 2) log 2 + (d/2) log(2 pi / kappa)
///         + log Gamma_d(nu / 2) - (nu / 2) log |lambda|
double log_niw_z(double kappa, double nu, int d, double log_det_lambda) {
  return 0.5 * nu * d * kLn2 + 0.5 * d * (kLog2Pi - std::log(kappa)) +
         log_multigamma(0.5 * nu, d) - 0.5 * nu * log_det_lambda;
}

double log_det_spd(const Eigen::MatrixXd& m, const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error(std::string(what) + " is not positive definite");
  }
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

}  // namespace

// ---------------------------------------------------------------------------
// Prior
// ---------------------------------------------------------------------------

Prior Prior::gaussian(Eigen::VectorXd mu0, double kappa0, double nu0,
                      Eigen::MatrixXd lambda0) {
  const int d = static_cast<int>(mu0.size());
  if (d < 1) throw std::invalid_argument("NIW prior: empty mean vector");
  if (!mu0.allFinite()) throw std::invalid_argument("NIW prior: mu0 must be finite");
  check_finite(kappa0, "NIW kappa0");
  check_finite(nu0, "NIW nu0");
  if (kappa0 <= 0.0) throw std::invalid_argument("NIW prior: kappa0 must be > 0");
  if (nu0 <= d - 1) {
    throw std::invalid_argument("NIW prior: nu0 must exceed d - 1");
  }
  if (lambda0.rows() != d || lambda0.cols() != d) {
    throw std::invalid_argument("NIW prior: lambda0 must be d x d");
  }
  if (!lambda0.allFinite()) throw std::invalid_argument("NIW prior: lambda0 must be finite");
  if (!lambda0.isApprox(lambda0.transpose(), 1e-10)) {
    throw std::invalid_argument("NIW prior: lambda0 must be symmetric");
  }
  NiwParams p;
  {
    Eigen::LLT<Eigen::MatrixXd> llt(lambda0);
    if (llt.info() != Eigen::Success) {
      throw std::invalid_argument("NIW prior: lambda0 must be positive definite");
    }
    p.log_det_lambda0 = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  }
  p.mu0 = std::move(mu0);
  p.kappa0 = kappa0;
  p.nu0 = nu0;
  p.lambda0 = std::move(lambda0);
  return Prior(Family::gaussian, std::move(p));
}

Prior Prior::bernoulli(double a, double b) {
  check_finite(a, "Beta a");
  check_finite(b, "Beta b");
  if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("Beta prior: a, b must be > 0");
  return Prior(Family::bernoulli, BetaParams{a, b});
}

Prior Prior::multinomial(Eigen::VectorXd alpha) {
  if (alpha.size() < 1) throw std::invalid_argument("Dirichlet prior: empty alpha");
  for (int j = 0; j < alpha.size(); ++j) {
    check_finite(alpha[j], "Dirichlet alpha");
    if (alpha[j] <= 0.0) {
      throw std::invalid_argument("Dirichlet prior: all alpha_j must be > 0");
    }
  }
  return Prior(Family::multinomial, DirichletParams{std::move(alpha)});
}

Prior Prior::poisson(double a, double b) {
  check_finite(a, "Gamma a");
  check_finite(b, "Gamma b");
  if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("Gamma prior: a, b must be > 0");
  return Prior(Family::poisson, GammaParams{a, b});
}

int Prior::dimension() const {
  switch (family_) {
    case Family::gaussian: return static_cast<int>(niw().mu0.size());
    case Family::multinomial: return static_cast<int>(dirichlet().alpha.size());
    default: return 1;
  }
}

const NiwParams& Prior::niw() const { return std::get<NiwParams>(params_); }
const BetaParams& Prior::beta() const { return std::get<BetaParams>(params_); }
const DirichletParams& Prior::dirichlet() const { return std::get<DirichletParams>(params_); }
const GammaParams& Prior::gamma() const { return std::get<GammaParams>(params_); }

// ---------------------------------------------------------------------------
// Sufficient statistics
// ---------------------------------------------------------------------------

namespace {

int stats_length(Family family, int dimension) {
  switch (family) {
    case Family::gaussian: return dimension + dimension * dimension;
    case Family::bernoulli: return 1;
    case Family::multinomial: return dimension;
    case Family::poisson: return 2;
  }
  throw std::logic_error("unknown family");
}

}  // namespace

SufficientStats suff_stats(const Dataset& data) {
  const Dataset sorted = data.canonical();
  SufficientStats s;
  s.family = sorted.family();
  s.dimension = sorted.dimension();
  s.n = sorted.size();
  s.u = Eigen::VectorXd::Zero(stats_length(s.family, s.dimension));

  switch (s.family) {
    case Family::gaussian: {
      const auto& rows = sorted.real_rows();
      const int d = s.dimension;
      Eigen::VectorXd sum_x = Eigen::VectorXd::Zero(d);
      Eigen::MatrixXd sum_xxt = Eigen::MatrixXd::Zero(d, d);
      for (int i = 0; i < rows.rows(); ++i) {
        const Eigen::VectorXd x = rows.row(i).transpose();
        sum_x += x;
        sum_xxt += x * x.transpose();
      }
      s.u.head(d) = sum_x;
      s.u.tail(d * d) = Eigen::Map<const Eigen::VectorXd>(sum_xxt.data(), d * d);
      break;
    }
    case Family::bernoulli: {
      long ones = 0;
      for (int v : sorted.int_values()) ones += v;
      s.u[0] = static_cast<double>(ones);
      break;
    }
    case Family::multinomial: {
      for (int v : sorted.int_values()) s.u[v] += 1.0;
      break;
    }
    case Family::poisson: {
      double sum = 0.0;
      double log_factorials = 0.0;
      for (int v : sorted.int_values()) {
        sum += v;
        log_factorials += std::lgamma(static_cast<double>(v) + 1.0);
      }
      s.u[0] = sum;
      s.u[1] = log_factorials;
      break;
    }
  }
  return s;
}

SufficientStats combine(const SufficientStats& s1, const SufficientStats& s2) {
  if (s1.family != s2.family) {
    throw std::invalid_argument("combine: family mismatch (" + to_string(s1.family) +
                                " vs " + to_string(s2.family) + ")");
  }
  if (s1.dimension != s2.dimension) {
    throw std::invalid_argument("combine: dimension mismatch (" +
                                std::to_string(s1.dimension) + " vs " +
                                std::to_string(s2.dimension) + ")");
  }
  SufficientStats out = s1;
  out.n += s2.n;
  out.u += s2.u;
  return out;
}

// ---------------------------------------------------------------------------
// Marginal likelihoods
// ---------------------------------------------------------------------------

namespace {

double log_marginal_gaussian(const SufficientStats& s, const NiwParams& p) {
  const int d = s.dimension;
  const double n = static_cast<double>(s.n);
  const Eigen::VectorXd sum_x = s.u.head(d);
  const Eigen::MatrixXd sum_xxt =
      Eigen::Map<const Eigen::MatrixXd>(s.u.tail(d * d).data(), d, d);

  const double kappa_n = p.kappa0 + n;
  const double nu_n = p.nu0 + n;
  const Eigen::VectorXd m_n = (p.kappa0 * p.mu0 + sum_x) / kappa_n;
  Eigen::MatrixXd lambda_n = p.lambda0 + sum_xxt +
                             p.kappa0 * p.mu0 * p.mu0.transpose() -
                             kappa_n * m_n * m_n.transpose();
  lambda_n = 0.5 * (lambda_n + lambda_n.transpose());

  const double log_det_n = log_det_spd(lambda_n, "NIW posterior scale matrix");
  return log_niw_z(kappa_n, nu_n, d, log_det_n) -
         log_niw_z(p.kappa0, p.nu0, d, p.log_det_lambda0) -
         0.5 * n * d * kLog2Pi;
}

double log_marginal_bernoulli(const SufficientStats& s, const BetaParams& p) {
  const double n = static_cast<double>(s.n);
  const double ones = s.u[0];
  return log_beta(p.a + ones, p.b + (n - ones)) - log_beta(p.a, p.b);
}

double log_marginal_multinomial(const SufficientStats& s, const DirichletParams& p) {
  const double total = p.alpha.sum();
  double out = std::lgamma(total) - std::lgamma(total + static_cast<double>(s.n));
  for (int j = 0; j < p.alpha.size(); ++j) {
    out += std::lgamma(p.alpha[j] + s.u[j]) - std::lgamma(p.alpha[j]);
  }
  return out;
}

double log_marginal_poisson(const SufficientStats& s, const GammaParams& p) {
  const double n = static_cast<double>(s.n);
  const double sum = s.u[0];
  const double log_factorials = s.u[1];
  return -log_factorials + p.a * std::log(p.b) - std::lgamma(p.a) +
         std::lgamma(p.a + sum) - (p.a + sum) * std::log(p.b + n);
}

}  // namespace

double log_marginal(const SufficientStats& stats, const Prior& prior) {
  if (stats.family != prior.family()) {
    throw std::invalid_argument("log_marginal: stats family " + to_string(stats.family) +
                                " does not match prior family " + to_string(prior.family()));
  }
  if (stats.dimension != prior.dimension()) {
    throw std::invalid_argument("log_marginal: dimension mismatch (" +
                                std::to_string(stats.dimension) + " vs " +
                                std::to_string(prior.dimension()) + ")");
  }
  if (stats.n == 0) return 0.0;

  switch (stats.family) {
    case Family::gaussian: return log_marginal_gaussian(stats, prior.niw());
    case Family::bernoulli: return log_marginal_bernoulli(stats, prior.beta());
    case Family::multinomial: return log_marginal_multinomial(stats, prior.dirichlet());
    case Family::poisson: return log_marginal_poisson(stats, prior.gamma());
  }
  throw std::logic_error("unknown family");
}

double log_base_measure(const SufficientStats& stats) {
  switch (stats.family) {
    case Family::gaussian:
      return -0.5 * static_cast<double>(stats.n) * stats.dimension * kLog2Pi;
    case Family::bernoulli:
    case Family::multinomial:
      return 0.0;
    case Family::poisson:
      return stats.n == 0 ? 0.0 : -stats.u[1];  // -sum log(x_i!)
  }
  throw std::logic_error("unknown family");
}

Prior default_prior(const Dataset& pooled) {
  if (pooled.is_empty()) {
    throw std::invalid_argument("default_prior: pooled data must be non-empty");
  }
  switch (pooled.family()) {
    case Family::gaussian: {
      const auto& rows = pooled.real_rows();
      const int d = static_cast<int>(rows.cols());
      const double n = static_cast<double>(rows.rows());
      const Eigen::VectorXd mean = rows.colwise().mean().transpose();
      Eigen::MatrixXd centered = rows.rowwise() - mean.transpose();
      Eigen::MatrixXd cov = centered.transpose() * centered / n;
      // Ridge keeps lambda0 positive definite on zero-variance dimensions.
      // When the whole covariance vanishes (n = 1 or identical rows) the
      // trace-scaled term would too, so the scale floors at 1.
      const double trace = cov.trace();
      const double scale = trace > 0.0 ? trace / d : 1.0;
      cov += 1e-6 * scale * Eigen::MatrixXd::Identity(d, d);
      return Prior::gaussian(mean, 1.0, static_cast<double>(d) + 2.0, std::move(cov));
    }
    case Family::bernoulli:
      return Prior::bernoulli(1.0, 1.0);
    case Family::multinomial:
      return Prior::multinomial(Eigen::VectorXd::Ones(pooled.dimension()));
    case Family::poisson:
      return Prior::poisson(1.0, 1.0);
  }
  throw std::logic_error("unknown family");
}

}  // namespace b2s
