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

#ifndef QQC_SVM_SVM_HPP
#define QQC_SVM_SVM_HPP

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "common/matrix.hpp"

namespace qqc::svm {

inline constexpr double kSupportThreshold = 1e-8;

/// Soft-margin dual solution. Labels are kept as +-1 (0 -> -1, 1 -> +1).
struct SvmModel {
  std::vector<double> alphas;
  double bias = 0.0;
  std::vector<int> labels_pm;
  std::vector<std::size_t> support_indices;
  double C = 1.0;
  bool converged = false;
  std::size_t iterations = 0;
};

struct SolverOptions {
  double kkt_tolerance = 1e-5;
  std::size_t max_pair_iterations = 1'000'000;
  /// Appends the dual objective after every pair update to `trace`.
  std::vector<double>* trace = nullptr;
};

/// Maximizes sum(a) - 1/2 a^T (yy^T o K) a subject to 0 <= a <= C and
/// y^T a = 0 by two-coordinate ascent on the maximal KKT-violating pair.
SvmModel solve_dual(const Matrix& k, std::span<const int> labels01, double C,
                    const SolverOptions& options = {});

/// W(a) for labels in +-1.
double dual_objective(const Matrix& k, std::span<const int> labels_pm,
                      std::span<const double> alphas);

double decision_value(const SvmModel& model, std::span<const double> k_row);

/// Label 1 when the decision value is strictly positive.
std::vector<int> predict(const SvmModel& model, const Matrix& k_test);

double accuracy(std::span<const int> predicted, std::span<const int> truth);

/// "SVM1" text format: C, bias, n_train, then "index alpha label" per
/// support vector. Non-support entries load with alpha 0 and label +1.
void save_model(const std::filesystem::path& path, const SvmModel& model);
SvmModel load_model(const std::filesystem::path& path);

}  // namespace qqc::svm

#endif  // QQC_SVM_SVM_HPP
