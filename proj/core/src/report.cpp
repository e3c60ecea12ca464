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

#include "b2s/report.hpp"

#include <json.hpp>
#include <stdexcept>

namespace b2s {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json prior_to_ordered_json(const Prior& prior) {
  ordered_json j;
  j["family"] = to_string(prior.family());
  switch (prior.family()) {
    case Family::gaussian: {
      const NiwParams& p = prior.niw();
      j["mu0"] = std::vector<double>(p.mu0.data(), p.mu0.data() + p.mu0.size());
      j["kappa0"] = p.kappa0;
      j["nu0"] = p.nu0;
      std::vector<std::vector<double>> rows;
      for (int r = 0; r < p.lambda0.rows(); ++r) {
        rows.emplace_back(p.lambda0.row(r).begin(), p.lambda0.row(r).end());
      }
      j["lambda0"] = rows;
      break;
    }
    case Family::bernoulli:
      j["a"] = prior.beta().a;
      j["b"] = prior.beta().b;
      break;
    case Family::multinomial: {
      const Eigen::VectorXd& a = prior.dirichlet().alpha;
      j["alpha"] = std::vector<double>(a.data(), a.data() + a.size());
      break;
    }
    case Family::poisson:
      j["a"] = prior.gamma().a;
      j["b"] = prior.gamma().b;
      break;
  }
  return j;
}

Prior prior_from_parsed(const ordered_json& j, Family family) {
  if (!j.is_object()) throw std::runtime_error("prior JSON must be an object");
  if (j.contains("family")) {
    const Family declared = family_from_string(j.at("family").get<std::string>());
    if (declared != family) {
      throw std::runtime_error("prior file declares family " + to_string(declared) +
                               " but the run uses " + to_string(family));
    }
  }
  switch (family) {
    case Family::gaussian: {
      const auto mu0v = j.at("mu0").get<std::vector<double>>();
      Eigen::VectorXd mu0 =
          Eigen::Map<const Eigen::VectorXd>(mu0v.data(), static_cast<int>(mu0v.size()));
      const auto rows = j.at("lambda0").get<std::vector<std::vector<double>>>();
      Eigen::MatrixXd lambda0(rows.size(), rows.empty() ? 0 : rows[0].size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) {
          throw std::runtime_error("prior file: lambda0 rows have uneven lengths");
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
          lambda0(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
        }
      }
      return Prior::gaussian(std::move(mu0), j.at("kappa0").get<double>(),
                             j.at("nu0").get<double>(), std::move(lambda0));
    }
    case Family::bernoulli:
      return Prior::bernoulli(j.at("a").get<double>(), j.at("b").get<double>());
    case Family::multinomial: {
      const auto av = j.at("alpha").get<std::vector<double>>();
      return Prior::multinomial(
          Eigen::Map<const Eigen::VectorXd>(av.data(), static_cast<int>(av.size())));
    }
    case Family::poisson:
      return Prior::poisson(j.at("a").get<double>(), j.at("b").get<double>());
  }
  throw std::logic_error("unknown family");
}

ordered_json input_to_json(const InputSummary& in) {
  return ordered_json{{"path", in.path}, {"rows", in.rows}, {"dimension", in.dimension}};
}

InputSummary input_from_json(const ordered_json& j) {
  InputSummary in;
  in.path = j.at("path").get<std::string>();
  in.rows = j.at("rows").get<int>();
  in.dimension = j.at("dimension").get<int>();
  return in;
}

Method method_from_string(const std::string& s) {
  if (s == "parametric") return Method::parametric;
  if (s == "dpm_exact") return Method::dpm_exact;
  if (s == "dpm_bhc") return Method::dpm_bhc;
  throw std::runtime_error("unknown method: " + s);
}

Decision decision_from_string(const std::string& s) {
  if (s == "H0_same") return Decision::h0_same;
  if (s == "H1_different") return Decision::h1_different;
  throw std::runtime_error("unknown decision: " + s);
}

}  // namespace

std::string to_json(const ReportRecord& record) {
  ordered_json j;
  j["tool"] = record.tool;
  j["version"] = record.version;
  j["method"] = to_string(record.method);
  if (record.backend) {
    j["backend"] = to_string(*record.backend);
  } else {
    j["backend"] = nullptr;
  }
  j["family"] = to_string(record.family);
  if (record.alpha) {
    j["alpha"] = *record.alpha;
  } else {
    j["alpha"] = nullptr;
  }
  j["log_prior_odds"] = record.log_prior_odds;
  j["inputs"] = ordered_json{{"x", input_to_json(record.input_x)},
                             {"y", input_to_json(record.input_y)}};
  j["prior"] = prior_to_ordered_json(record.prior);
  j["log_bayes_factor"] = record.log_bayes_factor;
  j["decision"] = to_string(record.decision);
  j["approximate"] = record.approximate;
  j["duration_ms"] = record.duration_ms;
  return j.dump(2) + "\n";
}

ReportRecord report_from_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("report JSON parse error: ") + e.what());
  }
  ReportRecord r;
  r.tool = j.at("tool").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.method = method_from_string(j.at("method").get<std::string>());
  if (!j.at("backend").is_null()) {
    const std::string b = j.at("backend").get<std::string>();
    if (b == "exact") {
      r.backend = DpmBackend::exact;
    } else if (b == "bhc") {
      r.backend = DpmBackend::bhc;
    } else {
      throw std::runtime_error("unknown backend: " + b);
    }
  }
  r.family = family_from_string(j.at("family").get<std::string>());
  if (!j.at("alpha").is_null()) r.alpha = j.at("alpha").get<double>();
  r.log_prior_odds = j.at("log_prior_odds").get<double>();
  r.input_x = input_from_json(j.at("inputs").at("x"));
  r.input_y = input_from_json(j.at("inputs").at("y"));
  r.prior = prior_from_parsed(j.at("prior"), r.family);
  r.log_bayes_factor = j.at("log_bayes_factor").get<double>();
  r.decision = decision_from_string(j.at("decision").get<std::string>());
  r.approximate = j.at("approximate").get<bool>();
  r.duration_ms = j.at("duration_ms").get<double>();
  return r;
}

std::string prior_to_json(const Prior& prior) {
  return prior_to_ordered_json(prior).dump(2) + "\n";
}

Prior prior_from_json(const std::string& json_text, Family family) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("prior JSON parse error: ") + e.what());
  }
  return prior_from_parsed(j, family);
}

}  // namespace b2s
