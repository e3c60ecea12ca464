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

#include "b2s/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace b2s {

std::string to_string(Family f) {
  switch (f) {
    case Family::gaussian: return "gaussian";
    case Family::bernoulli: return "bernoulli";
    case Family::multinomial: return "multinomial";
    case Family::poisson: return "poisson";
  }
  throw std::logic_error("unknown family");
}

Family family_from_string(const std::string& s) {
  if (s == "gaussian") return Family::gaussian;
  if (s == "bernoulli") return Family::bernoulli;
  if (s == "multinomial") return Family::multinomial;
  if (s == "poisson") return Family::poisson;
  throw std::invalid_argument("unknown family: " + s);
}

Dataset::Dataset(Family family, Eigen::MatrixXd reals, std::vector<int> ints, int arity)
    : family_(family), reals_(std::move(reals)), ints_(std::move(ints)), arity_(arity) {}

Dataset Dataset::gaussian(Eigen::MatrixXd rows) {
  if (rows.cols() < 1) {
    throw std::invalid_argument("gaussian dataset needs at least one column");
  }
  if (!rows.allFinite()) {
    throw std::invalid_argument("gaussian dataset contains non-finite values");
  }
  return Dataset(Family::gaussian, std::move(rows), {}, 0);
}

Dataset Dataset::bernoulli(std::vector<int> values) {
  for (int v : values) {
    if (v != 0 && v != 1) {
      throw std::invalid_argument("bernoulli value out of {0,1}: " + std::to_string(v));
    }
  }
  return Dataset(Family::bernoulli, Eigen::MatrixXd(0, 0), std::move(values), 0);
}

Dataset Dataset::categorical(std::vector<int> values, int arity) {
  int max_seen = -1;
  for (int v : values) {
    if (v < 0) throw std::invalid_argument("category index must be non-negative");
    max_seen = std::max(max_seen, v);
  }
  if (arity == 0) arity = max_seen + 1;
  if (arity < 1) throw std::invalid_argument("multinomial dataset needs arity >= 1");
  if (max_seen >= arity) {
    throw std::invalid_argument("category index " + std::to_string(max_seen) +
                                " exceeds arity " + std::to_string(arity));
  }
  return Dataset(Family::multinomial, Eigen::MatrixXd(0, 0), std::move(values), arity);
}

Dataset Dataset::poisson(std::vector<int> counts) {
  for (int v : counts) {
    if (v < 0) throw std::invalid_argument("poisson count must be non-negative");
  }
  return Dataset(Family::poisson, Eigen::MatrixXd(0, 0), std::move(counts), 0);
}

Dataset Dataset::empty(Family family, int dimension) {
  switch (family) {
    case Family::gaussian:
      return gaussian(Eigen::MatrixXd(0, dimension));
    case Family::bernoulli:
      return bernoulli({});
    case Family::multinomial:
      return categorical({}, dimension);
    case Family::poisson:
      return poisson({});
  }
  throw std::logic_error("unknown family");
}

int Dataset::size() const {
  return family_ == Family::gaussian ? static_cast<int>(reals_.rows())
                                     : static_cast<int>(ints_.size());
}

int Dataset::dimension() const {
  switch (family_) {
    case Family::gaussian: return static_cast<int>(reals_.cols());
    case Family::multinomial: return arity_;
    default: return 1;
  }
}

const Eigen::MatrixXd& Dataset::real_rows() const {
  if (family_ != Family::gaussian) {
    throw std::logic_error("real_rows() on non-gaussian dataset");
  }
  return reals_;
}

const std::vector<int>& Dataset::int_values() const {
  if (family_ == Family::gaussian) {
    throw std::logic_error("int_values() on gaussian dataset");
  }
  return ints_;
}

Dataset Dataset::canonical() const {
  if (family_ != Family::gaussian) {
    std::vector<int> sorted = ints_;
    std::sort(sorted.begin(), sorted.end());
    return Dataset(family_, Eigen::MatrixXd(0, 0), std::move(sorted), arity_);
  }
  const int n = static_cast<int>(reals_.rows());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int d = static_cast<int>(reals_.cols());
    for (int j = 0; j < d; ++j) {
      if (reals_(a, j) != reals_(b, j)) return reals_(a, j) < reals_(b, j);
    }
    return false;
  });
  Eigen::MatrixXd sorted(n, reals_.cols());
  for (int i = 0; i < n; ++i) sorted.row(i) = reals_.row(order[i]);
  return Dataset(family_, std::move(sorted), {}, 0);
}

Dataset Dataset::concat(const Dataset& x, const Dataset& y) {
  if (x.family_ != y.family_) {
    throw std::invalid_argument("cannot pool datasets: family mismatch (" +
                                to_string(x.family_) + " vs " + to_string(y.family_) + ")");
  }
  if (x.family_ == Family::gaussian) {
    if (x.dimension() != y.dimension()) {
      throw std::invalid_argument("cannot pool datasets: dimension mismatch (" +
                                  std::to_string(x.dimension()) + " vs " +
                                  std::to_string(y.dimension()) + ")");
    }
    Eigen::MatrixXd rows(x.size() + y.size(), x.dimension());
    rows.topRows(x.size()) = x.reals_;
    rows.bottomRows(y.size()) = y.reals_;
    return Dataset(x.family_, std::move(rows), {}, 0);
  }
  std::vector<int> values = x.ints_;
  values.insert(values.end(), y.ints_.begin(), y.ints_.end());
  const int arity = std::max(x.arity_, y.arity_);
  return Dataset(x.family_, Eigen::MatrixXd(0, 0), std::move(values), arity);
}

Dataset Dataset::select(const std::vector<int>& indices) const {
  for (int i : indices) {
    if (i < 0 || i >= size()) {
      throw std::out_of_range("dataset row index " + std::to_string(i) + " out of range");
    }
  }
  if (family_ == Family::gaussian) {
    Eigen::MatrixXd rows(static_cast<int>(indices.size()), reals_.cols());
    for (std::size_t i = 0; i < indices.size(); ++i) rows.row(static_cast<int>(i)) = reals_.row(indices[i]);
    return Dataset(family_, std::move(rows), {}, 0);
  }
  std::vector<int> values;
  values.reserve(indices.size());
  for (int i : indices) values.push_back(ints_[static_cast<std::size_t>(i)]);
  return Dataset(family_, Eigen::MatrixXd(0, 0), std::move(values), arity_);
}

}  // namespace b2s
