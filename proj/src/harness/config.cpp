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
#include "harness/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>

#include "common/error.hpp"
#include "dataset/dataset.hpp"
#include "text/features.hpp"
#include "vqc/spec_json.hpp"

namespace qqc::harness {

namespace {

constexpr std::string_view kModule = "experiment-harness";

using nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, std::string_view owner) {
  require(j.is_object(), ErrorCode::kParse, kModule, std::string(owner) + " must be an object");
  for (const auto& [key, value] : j.items())
    require(allowed.count(key) > 0, ErrorCode::kParse, kModule,
            std::string(owner) + ": unknown field \"" + key + "\"");
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, kModule, std::string("field \"") + key + "\": " + e.what());
  }
}

DatasetConfig dataset_from_json(const json& j, const std::filesystem::path& base_dir) {
  check_keys(j, {"source", "path", "format", "class_a", "class_b", "n_per_class", "separation"},
             "dataset");
  DatasetConfig d;
  const auto source = get_or<std::string>(j, "source", "selqa");
  if (source == "selqa") {
    d.source = DatasetSource::kSelqa;
  } else if (source == "synthetic") {
    d.source = DatasetSource::kSynthetic;
  } else {
    fail(ErrorCode::kParse, kModule, "unknown dataset source '" + source + "'");
  }
  d.path = get_or<std::string>(j, "path", "");
  if (!d.path.empty() && !base_dir.empty() && std::filesystem::path(d.path).is_relative())
    d.path = (base_dir / d.path).lexically_normal().string();
  d.format = get_or<std::string>(j, "format", "");
  d.class_a = get_or<std::string>(j, "class_a", d.class_a);
  d.class_b = get_or<std::string>(j, "class_b", d.class_b);
  d.n_per_class = get_or<std::size_t>(j, "n_per_class", d.n_per_class);
  d.separation = get_or<double>(j, "separation", d.separation);
  return d;
}

json dataset_to_json(const DatasetConfig& d) {
  json j{{"source", std::string(source_name(d.source))}};
  if (d.source == DatasetSource::kSelqa) {
    j["path"] = d.path;
    if (!d.format.empty()) j["format"] = d.format;
    j["class_a"] = d.class_a;
    j["class_b"] = d.class_b;
  } else {
    j["n_per_class"] = d.n_per_class;
    j["separation"] = d.separation;
  }
  return j;
}

}  // namespace

std::string_view classifier_name(Classifier c) { return c == Classifier::kQsvm ? "qsvm" : "vqc"; }

std::string_view source_name(DatasetSource s) {
  return s == DatasetSource::kSelqa ? "selqa" : "synthetic";
}

void ExperimentConfig::validate() const {
  require(!name.empty(), ErrorCode::kInvalidArgument, kModule, "config name is empty");
  require(name.find('/') == std::string::npos && name != "." && name != "..",
          ErrorCode::kInvalidArgument, kModule, "config name must be a plain file name");
  if (dataset.source == DatasetSource::kSelqa) {
    require(text::valid_feature_set(feature_set), ErrorCode::kInvalidArgument, kModule,
            "feature_set must be one of 2, 4, 5, 7, 11, got " + std::to_string(feature_set));
    require(!dataset.path.empty(), ErrorCode::kInvalidArgument, kModule,
            "selqa dataset needs a path");
    require(dataset::canonical_domain(dataset.class_a).has_value() &&
                dataset::canonical_domain(dataset.class_b).has_value(),
            ErrorCode::kInvalidArgument, kModule, "unknown class in dataset config");
    if (!dataset.format.empty())
      require(dataset::parse_format(dataset.format).has_value(), ErrorCode::kInvalidArgument,
              kModule, "unknown dataset format '" + dataset.format + "'");
  } else {
    require(feature_set >= 1 && feature_set <= 12, ErrorCode::kInvalidArgument, kModule,
            "synthetic feature_set must be in 1..12");
    require(dataset.n_per_class >= 2, ErrorCode::kInvalidArgument, kModule,
            "synthetic n_per_class must be >= 2");
    require(dataset.separation >= 0.0 && dataset.separation <= 1.0,
            ErrorCode::kInvalidArgument, kModule, "separation must be in [0, 1]");
  }
  feature_map.validate();
  require(feature_map.n_features == feature_set, ErrorCode::kInvalidArgument, kModule,
          "feature_map.n_features (" + std::to_string(feature_map.n_features) +
              ") differs from feature_set (" + std::to_string(feature_set) + ")");
  if (classifier == Classifier::kQsvm) {
    require(C.has_value(), ErrorCode::kInvalidArgument, kModule, "qsvm config needs C");
    require(*C > 0.0 && std::isfinite(*C), ErrorCode::kInvalidArgument, kModule,
            "C must be positive and finite");
    require(!ansatz && !optimizer, ErrorCode::kInvalidArgument, kModule,
            "qsvm config must not carry ansatz or optimizer");
  } else {
    require(ansatz.has_value() && optimizer.has_value(), ErrorCode::kInvalidArgument, kModule,
            "vqc config needs ansatz and optimizer");
    ansatz->validate();
    optimizer->validate();
    require(ansatz->n_qubits == feature_set, ErrorCode::kInvalidArgument, kModule,
            "ansatz.n_qubits (" + std::to_string(ansatz->n_qubits) +
                ") differs from feature_set (" + std::to_string(feature_set) + ")");
    require(!C && kernel_shots == 0, ErrorCode::kInvalidArgument, kModule,
            "vqc config must not carry C or kernel_shots");
  }
}

json config_to_json(const ExperimentConfig& c) {
  json j{{"name", c.name},
         {"exp_no", c.exp_no},
         {"dataset", dataset_to_json(c.dataset)},
         {"seed", c.seed},
         {"feature_set", c.feature_set},
         {"classifier", std::string(classifier_name(c.classifier))},
         {"feature_map", feature_map_to_json(c.feature_map)}};
  if (c.classifier == Classifier::kQsvm) {
    j["C"] = c.C.value_or(1.0);
    j["kernel_shots"] = c.kernel_shots;
  } else {
    if (c.ansatz) j["ansatz"] = ansatz_to_json(*c.ansatz);
    if (c.optimizer) j["optimizer"] = optimizer_to_json(*c.optimizer);
  }
  if (!c.output_dir.empty()) j["output_dir"] = c.output_dir;
  return j;
}

ExperimentConfig config_from_json(const json& j, const std::filesystem::path& base_dir) {
  check_keys(j,
             {"name", "exp_no", "dataset", "seed", "feature_set", "classifier", "feature_map",
              "C", "kernel_shots", "ansatz", "optimizer", "output_dir"},
             "config");
  ExperimentConfig c;
  c.name = get_or<std::string>(j, "name", c.name);
  c.exp_no = get_or<int>(j, "exp_no", 0);
  c.dataset = dataset_from_json(j.value("dataset", json::object()), base_dir);
  c.seed = get_or<std::uint64_t>(j, "seed", 0);
  c.feature_set = get_or<int>(j, "feature_set", c.feature_set);

  const auto classifier = get_or<std::string>(j, "classifier", "");
  if (classifier == "qsvm") {
    c.classifier = Classifier::kQsvm;
  } else if (classifier == "vqc") {
    c.classifier = Classifier::kVqc;
  } else {
    fail(ErrorCode::kParse, kModule, "classifier must be \"qsvm\" or \"vqc\"");
  }

  json fm = j.value("feature_map", json::object());
  if (fm.is_object() && !fm.contains("n_features")) fm["n_features"] = c.feature_set;
  c.feature_map = feature_map_from_json(fm);

  if (j.contains("C")) c.C = get_or<double>(j, "C", 1.0);
  c.kernel_shots = get_or<std::uint64_t>(j, "kernel_shots", 0);
  if (j.contains("ansatz")) {
    json a = j["ansatz"];
    if (a.is_object() && !a.contains("n_qubits")) a["n_qubits"] = c.feature_set;
    c.ansatz = ansatz_from_json(a);
  }
  if (j.contains("optimizer")) c.optimizer = optimizer_from_json(j["optimizer"]);
  c.output_dir = get_or<std::string>(j, "output_dir", "");
  c.validate();
  return c;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIo, kModule, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, kModule, path.string() + ": " + e.what());
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return config_from_json(read_json_file(path), path.parent_path());
}

std::vector<ExperimentConfig> load_sweep(const json& j, const std::filesystem::path& base_dir) {
  json entries;
  json defaults = json::object();
  if (j.is_array()) {
    entries = j;
  } else {
    check_keys(j, {"name", "defaults", "experiments"}, "sweep");
    require(j.contains("experiments") && j["experiments"].is_array(), ErrorCode::kParse,
            kModule, "sweep needs an \"experiments\" list");
    entries = j["experiments"];
    defaults = j.value("defaults", json::object());
  }
  require(!entries.empty(), ErrorCode::kInvalidArgument, kModule, "sweep is empty");
  std::vector<ExperimentConfig> out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    json merged = defaults;
    merged.merge_patch(entries[i]);
    if (!merged.contains("exp_no")) merged["exp_no"] = static_cast<int>(i + 1);
    if (!merged.contains("name")) merged["name"] = "exp" + std::to_string(i + 1);
    out.push_back(config_from_json(merged, base_dir));
    require(names.insert(out.back().name).second, ErrorCode::kInvalidArgument, kModule,
            "duplicate experiment name '" + out.back().name + "' in sweep");
  }
  return out;
}

std::vector<ExperimentConfig> load_sweep_file(const std::filesystem::path& path) {
  return load_sweep(read_json_file(path), path.parent_path());
}

std::filesystem::path default_output_root() {
  if (const char* env = std::getenv("QQC_OUTPUT_ROOT"); env && *env) return env;
  return "qqc_output";
}

std::filesystem::path output_dir_for(const ExperimentConfig& config) {
  if (!config.output_dir.empty()) return config.output_dir;
  return default_output_root() / config.name;
}

}  // namespace qqc::harness
