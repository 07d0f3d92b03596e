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
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qqc/qqc.h"

namespace {

using nlohmann::json;

struct CliFailure {
  int code;
  std::string json;
};

[[noreturn]] void usage_error(const std::string& message) {
  json j;
  j["error"] = {{"code", "invalid_argument"}, {"module", "cli"}, {"message", message}};
  throw CliFailure{QQC_ERR_INVALID_ARGUMENT, j.dump()};
}

void check(qqc_status status) {
  if (status != QQC_OK) throw CliFailure{static_cast<int>(status), qqc_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  qqc_string_free(s);
  return out;
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

/// ExperimentConfig fields settable from the command line.
struct ConfigFlags {
  std::string config_path;
  std::optional<std::string> name;
  std::optional<std::string> dataset_path;
  std::optional<std::string> dataset_format;
  std::optional<std::string> class_a;
  std::optional<std::string> class_b;
  std::optional<std::size_t> synthetic;
  std::optional<double> separation;
  std::optional<std::uint64_t> seed;
  std::optional<int> feature_set;
  std::optional<std::string> paulis;
  std::optional<std::string> entanglement;
  std::optional<int> reps;
  std::optional<double> c;
  std::optional<std::uint64_t> shots;
  std::optional<int> qc_reps;
  std::optional<std::string> rotation_gates;
  std::optional<std::string> entangle_gate;
  std::optional<int> max_iterations;
  std::optional<std::string> output_dir;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f, bool qsvm_fields, bool vqc_fields) {
  cmd->add_option("--config", f.config_path, "Experiment config JSON file");
  cmd->add_option("--name", f.name, "Experiment name (output subdirectory)");
  cmd->add_option("--dataset", f.dataset_path, "SelQA-style records file");
  cmd->add_option("--format", f.dataset_format, "Record format: jsonl or tsv");
  cmd->add_option("--class-a", f.class_a, "Domain mapped to label 0");
  cmd->add_option("--class-b", f.class_b, "Domain mapped to label 1");
  cmd->add_option("--synthetic", f.synthetic, "Use synthetic data with N points per class");
  cmd->add_option("--separation", f.separation, "Synthetic class separation in [0, 1]");
  cmd->add_option("--seed", f.seed, "Global seed");
  cmd->add_option("--feature-set", f.feature_set, "Feature count: 2, 4, 5, 7 or 11");
  cmd->add_option("--paulis", f.paulis, "Comma-separated Pauli words, e.g. X,Y,ZZ");
  cmd->add_option("--entanglement", f.entanglement, "full or linear");
  cmd->add_option("--reps", f.reps, "Feature map repetitions");
  if (qsvm_fields) {
    cmd->add_option("--C", f.c, "SVM box constraint");
    cmd->add_option("--shots", f.shots, "Kernel shots, 0 for exact overlaps");
  }
  if (vqc_fields) {
    cmd->add_option("--qc-reps", f.qc_reps, "Ansatz repetitions");
    cmd->add_option("--rotation-gates", f.rotation_gates, "Comma-separated, e.g. ry,rz");
    cmd->add_option("--entangle-gate", f.entangle_gate, "Entangling gate, e.g. cz");
    cmd->add_option("--max-iterations", f.max_iterations, "COBYLA objective evaluations");
  }
  cmd->add_option("--output-dir", f.output_dir, "Explicit output directory");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    json j;
    j["error"] = {{"code", "io"}, {"module", "cli"}, {"message", "cannot open " + path}};
    throw CliFailure{QQC_ERR_IO, j.dump()};
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    json j;
    j["error"] = {{"code", "parse"}, {"module", "cli"}, {"message", path + ": " + e.what()}};
    throw CliFailure{QQC_ERR_PARSE, j.dump()};
  }
}

/// Builds the config document and the directory relative paths resolve in.
std::pair<json, std::string> build_config(const ConfigFlags& f, const char* classifier) {
  json j = json::object();
  std::string base = std::filesystem::current_path().string();
  if (!f.config_path.empty()) {
    j = read_json(f.config_path);
    if (!j.is_object()) usage_error("config file must hold a JSON object");
    base = std::filesystem::absolute(f.config_path).parent_path().string();
  }
  if (classifier) {
    if (j.contains("classifier") && j["classifier"] != classifier)
      usage_error(std::string("config classifier is ") + j["classifier"].dump() +
                  ", this command trains " + classifier);
    j["classifier"] = classifier;
  }
  if (f.name) j["name"] = *f.name;
  json& ds = j["dataset"];
  if (!ds.is_object()) ds = json::object();
  if (f.dataset_path) {
    ds["source"] = "selqa";
    ds["path"] = std::filesystem::absolute(*f.dataset_path).string();
  }
  if (f.dataset_format) ds["format"] = *f.dataset_format;
  if (f.class_a) ds["class_a"] = *f.class_a;
  if (f.class_b) ds["class_b"] = *f.class_b;
  if (f.synthetic) {
    ds = json{{"source", "synthetic"}, {"n_per_class", *f.synthetic}};
  }
  if (f.separation) ds["separation"] = *f.separation;
  if (f.seed) j["seed"] = *f.seed;
  json& fm = j["feature_map"];
  if (!fm.is_object()) fm = json::object();
  if (f.feature_set) {
    j["feature_set"] = *f.feature_set;
    fm.erase("n_features");
    if (j.contains("ansatz") && j["ansatz"].is_object()) j["ansatz"].erase("n_qubits");
  }
  if (f.paulis) fm["pauli_strings"] = split_list(*f.paulis);
  if (f.entanglement) fm["entanglement"] = *f.entanglement;
  if (f.reps) fm["reps"] = *f.reps;
  const std::string cls = j.value("classifier", "");
  if (cls == "qsvm") {
    if (f.c) j["C"] = *f.c;
    if (!j.contains("C")) j["C"] = 1.0;
    if (f.shots) j["kernel_shots"] = *f.shots;
  } else if (cls == "vqc") {
    json& an = j["ansatz"];
    if (!an.is_object()) an = json::object();
    if (f.qc_reps) an["reps"] = *f.qc_reps;
    if (f.rotation_gates) an["rotation_gates"] = split_list(*f.rotation_gates);
    if (f.entangle_gate) an["entangle_gate"] = *f.entangle_gate;
    json& op = j["optimizer"];
    if (!op.is_object()) op = json::object();
    if (f.max_iterations) op["max_iterations"] = *f.max_iterations;
  }
  if (f.output_dir) j["output_dir"] = std::filesystem::absolute(*f.output_dir).string();
  return {j, base};
}

struct ConfigHandle {
  qqc_config* ptr = nullptr;
  ~ConfigHandle() { qqc_config_free(ptr); }
};

struct ResultHandle {
  qqc_result* ptr = nullptr;
  ~ResultHandle() { qqc_result_free(ptr); }
};

void load_config(const ConfigFlags& f, const char* classifier, ConfigHandle& h) {
  const auto [doc, base] = build_config(f, classifier);
  check(qqc_config_from_json(doc.dump().c_str(), base.c_str(), &h.ptr));
}

void print_json(const std::string& text) { std::cout << text << "\n"; }

void run_training(const ConfigFlags& f, const std::string& resources, const char* classifier) {
  ConfigHandle cfg;
  load_config(f, classifier, cfg);
  ResultHandle res;
  check(qqc_experiment_run(cfg.ptr, opt(resources), &res.ptr));
  char* text = nullptr;
  check(qqc_result_to_json(res.ptr, &text));
  json out = json::parse(take(text));
  char* dir = nullptr;
  check(qqc_result_output_dir(res.ptr, &dir));
  out["output_dir"] = take(dir);
  print_json(out.dump(2));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum question classification laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qqc_version()));
  std::string resources;
  app.add_option("--resources", resources,
                 "Text resource directory (default: $QQC_RESOURCE_DIR or built-in)");

  std::string records, format, out, class_a = "Historical Events", class_b = "Science";
  std::uint64_t seed = 0;

  auto* featurize = app.add_subcommand("featurize", "Write the raw 11-feature table of a corpus");
  featurize->add_option("--records", records, "Records file")->required();
  featurize->add_option("--format", format, "jsonl or tsv (default: by extension)");
  featurize->add_option("--out", out, "Output TSV path")->required();

  auto* dataset = app.add_subcommand("dataset", "Balance and split two domains");
  dataset->add_option("--records", records, "Records file")->required();
  dataset->add_option("--format", format, "jsonl or tsv (default: by extension)");
  dataset->add_option("--class-a", class_a, "Domain mapped to label 0");
  dataset->add_option("--class-b", class_b, "Domain mapped to label 1");
  dataset->add_option("--seed", seed, "Balancing and split seed");
  dataset->add_option("--out", out, "Directory for train.tsv, test.tsv, manifest.json");

  ConfigFlags kernel_flags, qsvm_flags, vqc_flags;
  std::string kernel_out;
  auto* kernel = app.add_subcommand("kernel", "Compute and validate quantum kernel matrices");
  add_config_flags(kernel, kernel_flags, true, false);
  kernel->add_option("--out", kernel_out, "Directory for the kernel files");

  auto* train_qsvm = app.add_subcommand("train-qsvm", "Train and evaluate a quantum-kernel SVM");
  add_config_flags(train_qsvm, qsvm_flags, true, false);
  auto* train_vqc = app.add_subcommand("train-vqc", "Train and evaluate a variational classifier");
  add_config_flags(train_vqc, vqc_flags, false, true);

  std::string sweep_path, output_root;
  unsigned jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "Run a list of experiments and write table CSVs");
  sweep->add_option("--config", sweep_path, "Sweep JSON file")->required();
  sweep->add_option("--output-root", output_root, "Output root (default: $QQC_OUTPUT_ROOT)");
  sweep->add_option("--jobs", jobs, "Experiments run concurrently");

  std::string results_dir, report_out;
  auto* report = app.add_subcommand("report", "Summarize results side by side");
  report->add_option("--results", results_dir, "Directory holding result folders")->required();
  report->add_option("--out", report_out, "Also write the report to this file");

  std::string result_dir, pred_format = "tsv";
  auto* exportp = app.add_subcommand("export-predictions", "Export per-question predictions");
  exportp->add_option("--result", result_dir, "Experiment output directory")->required();
  exportp->add_option("--format", pred_format, "tsv or jsonl");
  exportp->add_option("--out", out, "Output file")->required();

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::Success& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      usage_error(e.what());
    }

    if (featurize->parsed()) {
      std::size_t rows = 0;
      check(qqc_featurize(records.c_str(), opt(format), opt(resources), out.c_str(), &rows));
      print_json(json{{"rows", rows}, {"out", out}}.dump(2));
    } else if (dataset->parsed()) {
      char* manifest = nullptr;
      check(qqc_dataset_build(records.c_str(), opt(format), class_a.c_str(), class_b.c_str(),
                              seed, opt(out), &manifest));
      print_json(take(manifest));
    } else if (kernel->parsed()) {
      ConfigHandle cfg;
      load_config(kernel_flags, nullptr, cfg);
      char* rep = nullptr;
      check(qqc_kernel_compute(cfg.ptr, opt(resources), opt(kernel_out), &rep));
      print_json(take(rep));
    } else if (train_qsvm->parsed()) {
      run_training(qsvm_flags, resources, "qsvm");
    } else if (train_vqc->parsed()) {
      run_training(vqc_flags, resources, "vqc");
    } else if (sweep->parsed()) {
      char* summary = nullptr;
      check(qqc_sweep_run(sweep_path.c_str(), opt(output_root), opt(resources), jobs, &summary));
      print_json(take(summary));
    } else if (report->parsed()) {
      char* text = nullptr;
      check(qqc_report(results_dir.c_str(), &text));
      const auto body = take(text);
      if (!report_out.empty()) {
        std::ofstream f(report_out, std::ios::binary | std::ios::trunc);
        f << body;
        if (!f) {
          json j;
          j["error"] = {
              {"code", "io"}, {"module", "cli"}, {"message", "cannot write " + report_out}};
          throw CliFailure{QQC_ERR_IO, j.dump()};
        }
      }
      std::cout << body;
    } else if (exportp->parsed()) {
      std::size_t rows = 0;
      check(qqc_export_predictions(result_dir.c_str(), pred_format.c_str(), out.c_str(), &rows));
      print_json(json{{"rows", rows}, {"out", out}}.dump(2));
    }
  } catch (const CliFailure& failure) {
    std::cerr << failure.json << "\n";
    return failure.code;
  }
  return 0;
}
