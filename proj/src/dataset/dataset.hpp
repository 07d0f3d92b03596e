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
#ifndef QQC_DATASET_DATASET_HPP
#define QQC_DATASET_DATASET_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "common/matrix.hpp"

namespace qqc::dataset {

/// The ten SelQA domains in canonical spelling.
const std::array<std::string_view, 10>& selqa_domains();

/// Case-insensitive match against selqa_domains().
std::optional<std::string> canonical_domain(std::string_view name);

struct QuestionRecord {
  std::string question;
  std::string domain;
  std::string split;  // source split tag, may be empty
  std::size_t line = 0;
};

enum class RecordFormat { kJsonLines, kTsv };

std::optional<RecordFormat> parse_format(std::string_view name);
/// .tsv -> tsv, anything else -> json-lines.
RecordFormat format_for_path(const std::filesystem::path& path);

/// json-lines: {"question": ..., "type": ..., optional "split"} per line.
/// tsv: question<TAB>domain[<TAB>split]. Blank lines are skipped; malformed
/// lines, empty questions and unknown domains fail with the line number.
std::vector<QuestionRecord> load_records(const std::filesystem::path& path,
                                         RecordFormat format);

struct ExperimentDataset {
  std::vector<QuestionRecord> train;
  std::vector<QuestionRecord> test;
  std::vector<int> train_labels;
  std::vector<int> test_labels;
  std::string class_a;  // label 0
  std::string class_b;  // label 1
  std::uint64_t seed = 0;
  std::size_t class_a_available = 0;
  std::size_t class_b_available = 0;
  /// Indices into the input record list dropped by balancing, ascending.
  std::vector<std::size_t> removed_indices;
  /// Question strings present in both splits (raw-corpus duplicates).
  std::vector<std::string> cross_split_duplicates;

  nlohmann::json manifest() const;
};

/// Filters to the two classes, downsamples the larger one at random to the
/// smaller one's size, and splits each class 80/20 (floor for train).
ExperimentDataset build_experiment_dataset(const std::vector<QuestionRecord>& records,
                                           const std::string& class_a,
                                           const std::string& class_b, std::uint64_t seed);

struct SyntheticDataset {
  Matrix x_train;
  Matrix x_test;
  std::vector<int> y_train;
  std::vector<int> y_test;
};

/// Class 0 centered at 0 and class 1 at pi/2 in every feature, Gaussian jitter
/// with standard deviation (1 - separation) * pi/2, clipped to [0, pi/2].
/// Split 80/20 per class with floor for train.
SyntheticDataset generate_synthetic(std::size_t n_per_class, int n_features,
                                    double separation, std::uint64_t seed);

}  // namespace qqc::dataset

#endif  // QQC_DATASET_DATASET_HPP
