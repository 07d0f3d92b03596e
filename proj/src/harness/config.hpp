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
#ifndef QQC_HARNESS_CONFIG_HPP
#define QQC_HARNESS_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "encoding/feature_map.hpp"
#include "vqc/ansatz.hpp"
#include "vqc/cobyla.hpp"

namespace qqc::harness {

enum class Classifier { kQsvm, kVqc };
enum class DatasetSource { kSelqa, kSynthetic };

std::string_view classifier_name(Classifier c);
std::string_view source_name(DatasetSource s);

struct DatasetConfig {
  DatasetSource source = DatasetSource::kSelqa;
  std::string path;    // selqa records file
  std::string format;  // "jsonl", "tsv" or empty for by-extension
  std::string class_a = "Historical Events";
  std::string class_b = "Science";
  std::size_t n_per_class = 100;  // synthetic only
  double separation = 0.95;       // synthetic only
  bool operator==(const DatasetConfig&) const = default;
};

struct ExperimentConfig {
  std::string name = "experiment";
  int exp_no = 0;
  DatasetConfig dataset;
  std::uint64_t seed = 0;
  int feature_set = 11;
  Classifier classifier = Classifier::kQsvm;
  encoding::FeatureMapSpec feature_map;
  std::optional<double> C;                           // qsvm only
  std::uint64_t kernel_shots = 0;                    // qsvm only, 0 = exact
  std::optional<vqc::AnsatzSpec> ansatz;             // vqc only
  std::optional<vqc::OptimizerConfig> optimizer;     // vqc only
  std::string output_dir;                            // empty: output root

  /// Throws kInvalidArgument on inconsistent fields.
  void validate() const;
  bool operator==(const ExperimentConfig&) const = default;
};

/// Feature sets other than {2, 4, 5, 7, 11} are accepted only for synthetic
/// data, where any width in 1..12 is allowed.
nlohmann::json config_to_json(const ExperimentConfig& config);

/// Relative dataset paths resolve against `base_dir`. Unknown keys and
/// classifier fields for the other classifier are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j,
                                  const std::filesystem::path& base_dir = {});

ExperimentConfig load_config(const std::filesystem::path& path);

/// A sweep document is either a list of configs or an object holding
/// "experiments" and optional "defaults" merged under each entry.
std::vector<ExperimentConfig> load_sweep(const nlohmann::json& j,
                                         const std::filesystem::path& base_dir = {});
std::vector<ExperimentConfig> load_sweep_file(const std::filesystem::path& path);

/// $QQC_OUTPUT_ROOT if set, else ./qqc_output.
std::filesystem::path default_output_root();

/// config.output_dir if set, else <output root>/<name>.
std::filesystem::path output_dir_for(const ExperimentConfig& config);

/// Reads and parses a JSON file, mapping failures onto qqc errors.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace qqc::harness

#endif  // QQC_HARNESS_CONFIG_HPP
