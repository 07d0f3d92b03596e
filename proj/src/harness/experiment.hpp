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
#ifndef QQC_HARNESS_EXPERIMENT_HPP
#define QQC_HARNESS_EXPERIMENT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "common/matrix.hpp"
#include "encoding/feature_map.hpp"
#include "harness/config.hpp"

namespace qqc::harness {

/// Configured repetitions plus measured depths. QC entries are empty for QSVM.
/// qc_circuit_depth is the ansatz contribution on the composed circuit,
/// depth(FM + ansatz) - depth(FM), so fm + qc == total always holds.
struct DepthInfo {
  int fm_reps = 0;
  std::optional<int> qc_reps;
  int fm_circuit_depth = 0;
  std::optional<int> qc_circuit_depth;
  std::optional<int> qc_standalone_depth;
  int total_circuit_depth = 0;
};

DepthInfo compute_depths(const ExperimentConfig& config);

struct PhaseTimings {
  double featurize = 0.0;
  double kernel = 0.0;
  double solve = 0.0;
  double evaluate = 0.0;
};

struct PredictionRow {
  std::string question;
  std::string truth;
  std::string predicted;
};

/// Featurized and rescaled splits. Raw features keep the unscaled values.
struct PreparedData {
  Matrix raw_train;
  Matrix raw_test;
  Matrix x_train;
  Matrix x_test;
  std::vector<int> y_train;
  std::vector<int> y_test;
  std::vector<std::string> q_train;
  std::vector<std::string> q_test;
  std::string label0;
  std::string label1;
  encoding::ScalingParams scaling;
  nlohmann::json manifest;
};

struct RunOptions {
  /// Empty: text::default_resource_dir().
  std::filesystem::path resource_dir;
  bool write_artifacts = true;
};

/// Loads or generates the dataset, featurizes with n-gram models fitted on
/// the training split only, and rescales both splits with training ranges.
PreparedData prepare_data(const ExperimentConfig& config, const RunOptions& options = {});

struct ExperimentResult {
  ExperimentConfig config;
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  DepthInfo depth;
  PhaseTimings seconds;
  nlohmann::json details;
  std::vector<PredictionRow> predictions;
  std::filesystem::path output_dir;

  nlohmann::json to_json() const;
};

/// Runs featurize -> rescale -> encode -> (kernel + SVM | VQC) -> evaluate.
/// With write_artifacts the output directory is built under a temporary name
/// and renamed into place, so a failed run leaves nothing behind.
ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Parses result.json back; predictions are read from predictions.tsv.
ExperimentResult load_result(const std::filesystem::path& result_dir);

enum class PredictionFormat { kTsv, kJsonLines };

std::optional<PredictionFormat> parse_prediction_format(std::string_view name);

/// One line per test question: question, true domain, predicted domain.
std::string format_predictions(const std::vector<PredictionRow>& rows, PredictionFormat format);

/// Reads predictions from a result directory and writes them to `out`.
/// Returns the number of rows written.
std::size_t export_predictions(const std::filesystem::path& result_dir,
                               PredictionFormat format, const std::filesystem::path& out);

/// Tab-separated raw feature table for a records file, n-gram models fitted
/// on every record. Columns: domain, the 11 feature names, question.
std::string featurize_records_tsv(const std::filesystem::path& records_path,
                                  const std::string& format,
                                  const std::filesystem::path& resource_dir = {});

/// Writes `content` to `path` through a temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string format_double(double v);

}  // namespace qqc::harness

#endif  // QQC_HARNESS_EXPERIMENT_HPP
