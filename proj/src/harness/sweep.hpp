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
#ifndef QQC_HARNESS_SWEEP_HPP
#define QQC_HARNESS_SWEEP_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "harness/experiment.hpp"

namespace qqc::harness {

struct SweepRow {
  ExperimentConfig config;
  std::optional<ExperimentResult> result;
  std::string error_json;  // set when the experiment failed
};

struct SweepOptions {
  RunOptions run;
  /// Experiment outputs and CSV files go here; empty means the output root.
  std::filesystem::path output_root;
  /// Experiments run concurrently when > 1.
  unsigned jobs = 1;
};

/// Runs every config, recording failures per row. Rows keep input order.
std::vector<SweepRow> run_sweep(const std::vector<ExperimentConfig>& configs,
                                const SweepOptions& options = {});

/// Union of the QSVM and VQC table columns plus measured depths, accuracies
/// and status for every row.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Columns: Exp no., No. of Features, FM, Entanglement, FM Depth,
/// FM Combination, Testing Accuracy. QSVM rows only.
std::string qsvm_table_csv(const std::vector<SweepRow>& rows);

/// Columns: Exp no., Features, FM, Entanglement, FM depth, FM combination,
/// QC depth, Testing Accuracy. VQC rows only.
std::string vqc_table_csv(const std::vector<SweepRow>& rows);

/// classifier, features, fm_reps, qc_reps, total_circuit_depth, test_accuracy.
std::string depth_series_csv(const std::vector<SweepRow>& rows);

/// classifier, features, best_test_accuracy, experiments.
std::string feature_series_csv(const std::vector<SweepRow>& rows);

/// Writes sweep_results.csv, qsvm_table.csv and vqc_table.csv when the
/// classifier is present, depth_vs_accuracy.csv and features_vs_accuracy.csv.
std::vector<std::filesystem::path> write_sweep_outputs(const std::vector<SweepRow>& rows,
                                                       const std::filesystem::path& dir);

/// "['X', 'Y', 'ZZ']".
std::string pauli_combination(const std::vector<std::string>& words);

/// Sign of the depth/accuracy relation for one classifier.
struct DepthTrend {
  std::string classifier;
  std::size_t n = 0;
  std::size_t distinct_depths = 0;
  double correlation = 0.0;
  double short_depth_accuracy = 0.0;
  double deeper_accuracy = 0.0;
  std::string statement;
};

DepthTrend depth_trend(const std::string& classifier, const std::vector<ExperimentResult>& rows);

/// Finds every result.json below `dir` (or in it) in path order.
std::vector<ExperimentResult> collect_results(const std::filesystem::path& dir);

/// Markdown summary grouped by feature count, matched QSVM/VQC rows and the
/// depth-trend statements. Throws kData when no results exist.
std::string build_report(const std::vector<ExperimentResult>& results);

}  // namespace qqc::harness

#endif  // QQC_HARNESS_SWEEP_HPP
