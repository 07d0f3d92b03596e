// Copyright 2026 The QQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QQC_VQC_COBYLA_HPP
#define QQC_VQC_COBYLA_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qqc::vqc {

struct OptimizerConfig {
  int max_iterations = 100;  // objective evaluations
  double rhobeg = 1.0;
  double rhoend = 1e-4;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;  // 0: exact probabilities during training

  void validate() const;
  bool operator==(const OptimizerConfig&) const = default;
};

struct OptimizerResult {
  std::vector<double> x_best;
  double f_best = 0.0;
  std::vector<double> values;       // objective value per evaluation
  std::vector<double> best_so_far;  // running minimum of `values`
  int evaluations = 0;
  bool converged = false;  // trust radius reached rhoend
};

using Objective = std::function<double(std::span<const double>)>;

/// Unconstrained COBYLA: a simplex of n+1 interpolation points defines a
/// linear model; each step minimizes it over a ball of radius rho. rho is
/// halved from rhobeg down to rhoend whenever a step fails on an acceptable
/// simplex. Throws kInvalidArgument when max_iterations < n + 2.
OptimizerResult cobyla_minimize(const Objective& objective, std::vector<double> x0,
                                const OptimizerConfig& config);

}  // namespace qqc::vqc

#endif  // QQC_VQC_COBYLA_HPP
