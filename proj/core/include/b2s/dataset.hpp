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
#include <string>
#include <vector>

namespace b2s {

/// The four supported conjugate-exponential model families.
enum class Family { gaussian, bernoulli, multinomial, poisson };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// A validated, immutable sample of observations from one family.
///
/// One row is one observation: a d-vector for the Gaussian family, a value
/// in {0,1} for Bernoulli, a category index in {0..arity-1} for Multinomial,
/// a non-negative count for Poisson. Dimension (or arity) is fixed per
/// dataset and every entry must be finite; both are checked at construction.
class Dataset {
 public:
  /// Empty Bernoulli sample; placeholder state for containers.
  Dataset() : family_(Family::bernoulli), reals_(0, 0) {}

  static Dataset gaussian(Eigen::MatrixXd rows);
  static Dataset bernoulli(std::vector<int> values);
  /// arity = 0 infers the arity as max(values) + 1.
  static Dataset categorical(std::vector<int> values, int arity = 0);
  static Dataset poisson(std::vector<int> counts);

  /// Empty dataset of a given shape (dimension for gaussian, arity for
  /// multinomial, ignored otherwise).
  static Dataset empty(Family family, int dimension);

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] int size() const;
  [[nodiscard]] bool is_empty() const { return size() == 0; }

  /// Gaussian: d. Multinomial: arity. Bernoulli/Poisson: 1.
  [[nodiscard]] int dimension() const;

  [[nodiscard]] const Eigen::MatrixXd& real_rows() const;
  [[nodiscard]] const std::vector<int>& int_values() const;

  /// Copy with rows in canonical (sorted) order. The tests computed by this
  /// library are exchangeable, so any entry point that must be bit-identical
  /// under permutation of its input reorders through this first.
  [[nodiscard]] Dataset canonical() const;

  /// Single dataset holding the rows of both inputs (X then Y).
  /// Throws on family or dimension mismatch; multinomial arities are unified
  /// to the larger of the two.
  static Dataset concat(const Dataset& x, const Dataset& y);

  /// Subset of rows by index, preserving family and shape.
  [[nodiscard]] Dataset select(const std::vector<int>& indices) const;

 private:
  Dataset(Family family, Eigen::MatrixXd reals, std::vector<int> ints, int arity);

  Family family_;
  Eigen::MatrixXd reals_;   // gaussian only, n x d
  std::vector<int> ints_;   // bernoulli / multinomial / poisson
  int arity_ = 0;           // multinomial only
};

}  // namespace b2s
