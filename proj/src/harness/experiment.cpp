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
#include "harness/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <unistd.h>

#include "common/error.hpp"
#include "dataset/dataset.hpp"
#include "kernel/quantum_kernel.hpp"
#include "sim/circuit.hpp"
#include "svm/svm.hpp"
#include "text/features.hpp"
#include "text/ngram.hpp"
#include "text/resources.hpp"
#include "text/tokenizer.hpp"
#include "vqc/ansatz.hpp"
#include "vqc/spec_json.hpp"
#include "vqc/vqc.hpp"

#ifndef QQC_VERSION_STRING
#define QQC_VERSION_STRING "0.0.0"
#endif

namespace qqc::harness {

namespace {

constexpr std::string_view kModule = "experiment-harness";

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string clean_field(std::string s) {
  for (auto& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

std::filesystem::path temp_sibling(const std::filesystem::path& target) {
  static std::atomic<unsigned> counter{0};
  auto name = "." + target.filename().string() + ".tmp-" + std::to_string(::getpid()) + "-" +
              std::to_string(counter.fetch_add(1));
  return target.parent_path() / name;
}

text::TextResources resources_for(const RunOptions& options) {
  return text::load_resources(options.resource_dir.empty() ? text::default_resource_dir()
                                                           : options.resource_dir);
}

Matrix features_matrix(const std::vector<dataset::QuestionRecord>& records,
                       const std::vector<int>& labels, int feature_set,
                       const text::NgramModels& models, const text::TextResources& res) {
  Matrix m(records.size(), static_cast<std::size_t>(feature_set));
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto f = text::featurize(records[r].question, labels[r], models, res);
    const auto v = text::feature_vector(f, feature_set);
    std::copy(v.begin(), v.end(), m.row(r).begin());
  }
  return m;
}

json depth_to_json(const DepthInfo& d) {
  json j{{"fm_reps", d.fm_reps},
         {"fm_circuit_depth", d.fm_circuit_depth},
         {"total_circuit_depth", d.total_circuit_depth}};
  j["qc_reps"] = d.qc_reps ? json(*d.qc_reps) : json(nullptr);
  j["qc_circuit_depth"] = d.qc_circuit_depth ? json(*d.qc_circuit_depth) : json(nullptr);
  j["qc_standalone_depth"] =
      d.qc_standalone_depth ? json(*d.qc_standalone_depth) : json(nullptr);
  return j;
}

std::optional<int> optional_int(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<int>();
}

std::vector<PredictionRow> read_predictions(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIo, kModule,
          "missing prediction artifact " + path.string());
  std::vector<PredictionRow> rows;
  std::string line;
  std::getline(in, line);
  require(line == "question\ttrue_domain\tpredicted_domain", ErrorCode::kParse, kModule,
          path.string() + ": unexpected header");
  for (std::size_t no = 2; std::getline(in, line); ++no) {
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    require(t2 != std::string::npos, ErrorCode::kParse, kModule,
            path.string() + ":" + std::to_string(no) + ": expected three columns");
    rows.push_back({line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), line.substr(t2 + 1)});
  }
  return rows;
}

std::string history_csv(const vqc::TrainedVqc& model) {
  std::string out = "evaluation,theta_hash,loss,train_accuracy,best_loss\n";
  double best = 0.0;
  for (std::size_t i = 0; i < model.history.size(); ++i) {
    const auto& h = model.history[i];
    best = i == 0 ? h.loss : std::min(best, h.loss);
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(h.theta_hash));
    out += std::to_string(i + 1) + "," + hash + "," + format_double(h.loss) + "," +
           format_double(h.train_accuracy) + "," + format_double(best) + "\n";
  }
  return out;
}

std::string features_tsv(const PreparedData& data) {
  std::string out = "split\tlabel";
  for (std::size_t c = 0; c < data.raw_train.cols(); ++c)
    out += "\t" + std::string(text::feature_names()[c]);
  out += "\n";
  auto emit = [&](const char* split, const Matrix& m, const std::vector<int>& y) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out += std::string(split) + "\t" + std::to_string(y[r]);
      for (double v : m.row(r)) out += "\t" + format_double(v);
      out += "\n";
    }
  };
  emit("train", data.raw_train, data.y_train);
  emit("test", data.raw_test, data.y_test);
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto tmp = temp_sibling(path);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorCode::kIo, kModule,
            "cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    require(static_cast<bool>(out), ErrorCode::kIo, kModule, "write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(ErrorCode::kIo, kModule, "cannot move output into " + path.string());
  }
}

DepthInfo compute_depths(const ExperimentConfig& config) {
  DepthInfo d;
  const auto fm = encoding::build_pauli_feature_map(config.feature_map);
  d.fm_reps = config.feature_map.reps;
  d.fm_circuit_depth = sim::circuit_depth(fm);
  d.total_circuit_depth = d.fm_circuit_depth;
  if (config.classifier == Classifier::kVqc && config.ansatz) {
    const auto ansatz = vqc::build_two_local(*config.ansatz);
    auto composed = fm;
    composed.append(ansatz);
    d.qc_reps = config.ansatz->reps;
    d.qc_standalone_depth = sim::circuit_depth(ansatz);
    d.total_circuit_depth = sim::circuit_depth(composed);
    d.qc_circuit_depth = d.total_circuit_depth - d.fm_circuit_depth;
  }
  return d;
}

PreparedData prepare_data(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();
  PreparedData data;
  if (config.dataset.source == DatasetSource::kSynthetic) {
    auto syn = dataset::generate_synthetic(config.dataset.n_per_class, config.feature_set,
                                           config.dataset.separation, config.seed);
    data.raw_train = syn.x_train;
    data.raw_test = syn.x_test;
    data.y_train = std::move(syn.y_train);
    data.y_test = std::move(syn.y_test);
    data.label0 = "class_0";
    data.label1 = "class_1";
    for (std::size_t i = 0; i < data.y_train.size(); ++i)
      data.q_train.push_back("synthetic-train-" + std::to_string(i));
    for (std::size_t i = 0; i < data.y_test.size(); ++i)
      data.q_test.push_back("synthetic-test-" + std::to_string(i));
    data.manifest = {{"source", "synthetic"},
                     {"n_per_class", config.dataset.n_per_class},
                     {"separation", config.dataset.separation},
                     {"n_features", config.feature_set},
                     {"seed", config.seed},
                     {"train_total", data.y_train.size()},
                     {"test_total", data.y_test.size()}};
    // Synthetic features already live in [0, pi/2].
    data.x_train = std::move(syn.x_train);
    data.x_test = std::move(syn.x_test);
    data.scaling.min.assign(data.x_train.cols(), 0.0);
    data.scaling.max.assign(data.x_train.cols(), std::numbers::pi / 2.0);
    return data;
  }

  const std::filesystem::path path = config.dataset.path;
  const auto format = config.dataset.format.empty()
                          ? dataset::format_for_path(path)
                          : *dataset::parse_format(config.dataset.format);
  const auto records = dataset::load_records(path, format);
  auto ds = dataset::build_experiment_dataset(records, config.dataset.class_a,
                                              config.dataset.class_b, config.seed);
  data.manifest = ds.manifest();
  data.manifest["source"] = "selqa";
  data.manifest["path"] = path.string();
  data.manifest["records_loaded"] = records.size();
  data.label0 = ds.class_a;
  data.label1 = ds.class_b;
  data.y_train = ds.train_labels;
  data.y_test = ds.test_labels;
  for (const auto& r : ds.train) data.q_train.push_back(r.question);
  for (const auto& r : ds.test) data.q_test.push_back(r.question);

  const auto res = resources_for(options);
  std::vector<std::vector<std::string>> sentences;
  sentences.reserve(ds.train.size());
  for (const auto& r : ds.train) sentences.push_back(text::tokenize(r.question));
  const auto models = text::train_ngram_models(sentences);
  data.raw_train = features_matrix(ds.train, ds.train_labels, config.feature_set, models, res);
  data.raw_test = features_matrix(ds.test, ds.test_labels, config.feature_set, models, res);
  auto rescaled = encoding::rescale_features(data.raw_train);
  data.x_train = std::move(rescaled.x);
  data.scaling = std::move(rescaled.params);
  data.x_test = encoding::apply_scaling(data.raw_test, data.scaling);
  return data;
}

json ExperimentResult::to_json() const {
  return json{{"config", config_to_json(config)},
              {"classifier", std::string(classifier_name(config.classifier))},
              {"train_accuracy", train_accuracy},
              {"test_accuracy", test_accuracy},
              {"n_train", n_train},
              {"n_test", n_test},
              {"depth", depth_to_json(depth)},
              {"timings_seconds",
               {{"featurize", seconds.featurize},
                {"kernel", seconds.kernel},
                {"solve", seconds.solve},
                {"evaluate", seconds.evaluate}}},
              {"environment",
               {{"version", QQC_VERSION_STRING}, {"seed", config.seed}, {"rng", "mt19937_64"}}},
              {"details", details}};
}

ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  ExperimentResult result;
  result.config = config;
  result.depth = compute_depths(config);

  auto t0 = Clock::now();
  const auto data = prepare_data(config, options);
  result.seconds.featurize = seconds_since(t0);
  result.n_train = data.y_train.size();
  result.n_test = data.y_test.size();
  result.details["dataset"] = data.manifest;

  std::vector<std::pair<std::string, std::string>> artifacts;
  std::vector<std::pair<std::string, std::function<void(const std::filesystem::path&)>>> writers;
  std::vector<int> test_pred;

  if (config.classifier == Classifier::kQsvm) {
    const kernel::KernelMode mode{config.kernel_shots, config.seed};
    t0 = Clock::now();
    auto k_train = kernel::train_kernel_matrix(config.feature_map, data.x_train, mode);
    auto k_test = kernel::test_kernel_matrix(config.feature_map, data.x_train, data.x_test, mode);
    result.seconds.kernel = seconds_since(t0);
    const auto report = kernel::validate_kernel(k_train);
    result.details["kernel_report"] = {{"max_asymmetry", report.max_asymmetry},
                                       {"max_diagonal_deviation", report.max_diagonal_deviation},
                                       {"min_entry", report.min_entry},
                                       {"max_entry", report.max_entry},
                                       {"min_eigenvalue", report.min_eigenvalue},
                                       {"pass", report.pass},
                                       {"failures", report.failures}};

    t0 = Clock::now();
    const auto model = svm::solve_dual(k_train.values, data.y_train, *config.C);
    result.seconds.solve = seconds_since(t0);
    result.details["svm"] = {
        {"C", model.C},
        {"bias", model.bias},
        {"n_support", model.support_indices.size()},
        {"converged", model.converged},
        {"iterations", model.iterations},
        {"dual_objective", svm::dual_objective(k_train.values, model.labels_pm, model.alphas)}};

    t0 = Clock::now();
    result.train_accuracy = svm::accuracy(svm::predict(model, k_train.values), data.y_train);
    test_pred = svm::predict(model, k_test.values);
    result.test_accuracy = svm::accuracy(test_pred, data.y_test);
    result.seconds.evaluate = seconds_since(t0);

    writers.emplace_back("kernel_train.qkm", [k_train](const std::filesystem::path& p) {
      kernel::save_kernel(p, k_train);
    });
    writers.emplace_back("kernel_test.qkm", [k_test](const std::filesystem::path& p) {
      kernel::save_kernel(p, k_test);
    });
    writers.emplace_back("model.svm",
                         [model](const std::filesystem::path& p) { svm::save_model(p, model); });
  } else {
    t0 = Clock::now();
    const auto model =
        vqc::train_vqc(config.feature_map, *config.ansatz, data.x_train, data.y_train,
                       *config.optimizer);
    result.seconds.solve = seconds_since(t0);
    result.details["vqc"] = {{"parameter_count", model.theta.size()},
                             {"evaluations", model.history.size()},
                             {"converged", model.converged},
                             {"initial_loss", model.initial_loss},
                             {"final_loss", model.final_loss}};

    t0 = Clock::now();
    result.train_accuracy = svm::accuracy(vqc::predict_vqc(model, data.x_train), data.y_train);
    test_pred = vqc::predict_vqc(model, data.x_test);
    result.test_accuracy = svm::accuracy(test_pred, data.y_test);
    result.seconds.evaluate = seconds_since(t0);

    writers.emplace_back("model.vqc",
                         [model](const std::filesystem::path& p) { vqc::save_vqc(p, model); });
    artifacts.emplace_back("history.csv", history_csv(model));
  }

  for (std::size_t i = 0; i < test_pred.size(); ++i) {
    result.predictions.push_back({data.q_test[i], data.y_test[i] == 1 ? data.label1 : data.label0,
                                  test_pred[i] == 1 ? data.label1 : data.label0});
  }
  if (!options.write_artifacts) return result;

  artifacts.emplace_back("predictions.tsv",
                         format_predictions(result.predictions, PredictionFormat::kTsv));
  artifacts.emplace_back("features.tsv", features_tsv(data));
  artifacts.emplace_back("dataset_manifest.json", data.manifest.dump(2) + "\n");
  json names = json::array();
  for (const auto& [name, _] : artifacts) names.push_back(name);
  for (const auto& [name, _] : writers) names.push_back(name);
  result.details["artifacts"] = names;

  const auto target = output_dir_for(config);
  if (!target.parent_path().empty()) std::filesystem::create_directories(target.parent_path());
  const auto tmp = temp_sibling(target);
  try {
    std::filesystem::create_directories(tmp);
    for (const auto& [name, content] : artifacts) {
      std::ofstream out(tmp / name, std::ios::binary | std::ios::trunc);
      out << content;
      require(static_cast<bool>(out), ErrorCode::kIo, kModule, "write failed: " + name);
    }
    for (const auto& [name, write] : writers) write(tmp / name);
    std::ofstream out(tmp / "result.json", std::ios::binary | std::ios::trunc);
    out << result.to_json().dump(2) << "\n";
    require(static_cast<bool>(out), ErrorCode::kIo, kModule, "write failed: result.json");
    out.close();
    std::filesystem::remove_all(target);
    std::filesystem::rename(tmp, target);
  } catch (const std::filesystem::filesystem_error& e) {
    std::error_code ec;
    std::filesystem::remove_all(tmp, ec);
    fail(ErrorCode::kIo, kModule, e.what());
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove_all(tmp, ec);
    throw;
  }
  result.output_dir = target;
  return result;
}

ExperimentResult load_result(const std::filesystem::path& result_dir) {
  const auto j = read_json_file(result_dir / "result.json");
  ExperimentResult r;
  try {
    r.config = config_from_json(j.at("config"));
    r.train_accuracy = j.at("train_accuracy").get<double>();
    r.test_accuracy = j.at("test_accuracy").get<double>();
    r.n_train = j.at("n_train").get<std::size_t>();
    r.n_test = j.at("n_test").get<std::size_t>();
    const auto& d = j.at("depth");
    r.depth.fm_reps = d.at("fm_reps").get<int>();
    r.depth.qc_reps = optional_int(d, "qc_reps");
    r.depth.fm_circuit_depth = d.at("fm_circuit_depth").get<int>();
    r.depth.qc_circuit_depth = optional_int(d, "qc_circuit_depth");
    r.depth.qc_standalone_depth = optional_int(d, "qc_standalone_depth");
    r.depth.total_circuit_depth = d.at("total_circuit_depth").get<int>();
    const auto& t = j.at("timings_seconds");
    r.seconds = {t.at("featurize").get<double>(), t.at("kernel").get<double>(),
                 t.at("solve").get<double>(), t.at("evaluate").get<double>()};
    r.details = j.value("details", json::object());
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, kModule, (result_dir / "result.json").string() + ": " + e.what());
  }
  r.output_dir = result_dir;
  if (std::filesystem::exists(result_dir / "predictions.tsv"))
    r.predictions = read_predictions(result_dir / "predictions.tsv");
  return r;
}

std::optional<PredictionFormat> parse_prediction_format(std::string_view name) {
  if (name == "tsv") return PredictionFormat::kTsv;
  if (name == "jsonl" || name == "json-lines") return PredictionFormat::kJsonLines;
  return std::nullopt;
}

std::string format_predictions(const std::vector<PredictionRow>& rows, PredictionFormat format) {
  std::string out;
  if (format == PredictionFormat::kTsv) {
    out = "question\ttrue_domain\tpredicted_domain\n";
    for (const auto& r : rows)
      out += clean_field(r.question) + "\t" + clean_field(r.truth) + "\t" +
             clean_field(r.predicted) + "\n";
  } else {
    for (const auto& r : rows)
      out += json{{"question", r.question},
                  {"true_domain", r.truth},
                  {"predicted_domain", r.predicted}}
                 .dump() +
             "\n";
  }
  return out;
}

std::size_t export_predictions(const std::filesystem::path& result_dir,
                               PredictionFormat format, const std::filesystem::path& out) {
  require(std::filesystem::exists(result_dir / "result.json"), ErrorCode::kIo, kModule,
          "no result.json in " + result_dir.string());
  const auto rows = read_predictions(result_dir / "predictions.tsv");
  if (!out.parent_path().empty()) std::filesystem::create_directories(out.parent_path());
  write_file_atomic(out, format_predictions(rows, format));
  return rows.size();
}

std::string featurize_records_tsv(const std::filesystem::path& records_path,
                                  const std::string& format,
                                  const std::filesystem::path& resource_dir) {
  const auto fmt = format.empty() ? dataset::format_for_path(records_path)
                                  : dataset::parse_format(format).value_or(
                                        dataset::RecordFormat::kJsonLines);
  require(format.empty() || dataset::parse_format(format).has_value(),
          ErrorCode::kInvalidArgument, kModule, "unknown record format '" + format + "'");
  const auto records = dataset::load_records(records_path, fmt);
  require(!records.empty(), ErrorCode::kData, kModule, "no records in " + records_path.string());
  RunOptions options;
  options.resource_dir = resource_dir;
  const auto res = resources_for(options);
  std::vector<std::vector<std::string>> sentences;
  sentences.reserve(records.size());
  for (const auto& r : records) sentences.push_back(text::tokenize(r.question));
  const auto models = text::train_ngram_models(sentences);

  std::string out = "domain";
  for (auto name : text::feature_names()) out += "\t" + std::string(name);
  out += "\tquestion\n";
  for (const auto& r : records) {
    const auto f = text::featurize(r.question, 0, models, res);
    out += r.domain;
    for (double v : text::feature_vector(f, 11)) out += "\t" + format_double(v);
    out += "\t" + clean_field(r.question) + "\n";
  }
  return out;
}

}  // namespace qqc::harness
