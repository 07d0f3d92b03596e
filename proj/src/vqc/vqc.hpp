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

#ifndef QQC_VQC_VQC_HPP
#define QQC_VQC_VQC_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "common/matrix.hpp"
#include "encoding/feature_map.hpp"
#include "vqc/ansatz.hpp"
#include "vqc/cobyla.hpp"

namespace qqc::vqc {

struct ParityProbs {
  double p0 = 1.0;
  double p1 = 0.0;
};

/// Odd-parity probability mass and its complement.
ParityProbs parity_probabilities(const sim::Statevector& state);

/// Ansatz(theta) applied to the bound feature map state.
ParityProbs forward(const sim::ParameterizedCircuit& feature_map,
                    const sim::ParameterizedCircuit& ansatz,
                    std::span<const double> theta, std::span<const double> x);

ParityProbs forward(const encoding::FeatureMapSpec& fm_spec, const AnsatzSpec& ansatz_spec,
                    std::span<const double> theta, std::span<const double> x);

/// Mean binary cross-entropy with p1 clamped to [1e-12, 1 - 1e-12].
double bce_loss(std::span<const double> p1, std::span<const int> labels);

struct HistoryEntry {
  std::uint64_t theta_hash = 0;
  double loss = 0.0;
  double train_accuracy = 0.0;
};

struct TrainedVqc {
  encoding::FeatureMapSpec feature_map;
  AnsatzSpec ansatz;
  std::vector<double> theta;
  std::vector<HistoryEntry> history;
  bool converged = false;
  double initial_loss = 0.0;
  double final_loss = 0.0;
};

/// COBYLA on the training loss from a seeded uniform start in [-pi, pi].
/// config.shots > 0 estimates p1 from sampled counts instead.
TrainedVqc train_vqc(const encoding::FeatureMapSpec& fm_spec, const AnsatzSpec& ansatz_spec,
                     const Matrix& x_train, std::span<const int> y_train,
                     const OptimizerConfig& config);

std::vector<double> predict_proba(const TrainedVqc& model, const Matrix& x);

/// Label 1 iff p1 > 0.5.
std::vector<int> predict_vqc(const TrainedVqc& model, const Matrix& x);

/// "VQC1", feature-map JSON line, ansatz JSON line, "converged 0|1", then
/// one theta value per line.
void save_vqc(const std::filesystem::path& path, const TrainedVqc& model);
TrainedVqc load_vqc(const std::filesystem::path& path);

std::uint64_t hash_theta(std::span<const double> theta);

}  // namespace qqc::vqc

#endif  // QQC_VQC_VQC_HPP
