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
#include "qqc/qqc.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include <json.hpp>

#include "common/error.hpp"
#include "dataset/dataset.hpp"
#include "harness/config.hpp"
#include "harness/experiment.hpp"
#include "harness/sweep.hpp"
#include "kernel/quantum_kernel.hpp"

struct qqc_config {
  qqc::harness::ExperimentConfig value;
};

struct qqc_result {
  qqc::harness::ExperimentResult value;
};

struct qqc_kernel {
  qqc::kernel::KernelMatrix value;
};

namespace {

using nlohmann::json;
using qqc::ErrorCode;

constexpr std::string_view kModule = "c-api";

thread_local std::string g_last_error;

qqc_status record(const qqc::Error& e) {
  g_last_error = e.to_json();
  return static_cast<qqc_status>(static_cast<int>(e.code()));
}

template <typename Body>
qqc_status guard(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return QQC_OK;
  } catch (const qqc::Error& e) {
    return record(e);
  } catch (const json::exception& e) {
    return record(qqc::Error(ErrorCode::kParse, std::string(kModule), e.what()));
  } catch (const std::filesystem::filesystem_error& e) {
    return record(qqc::Error(ErrorCode::kIo, std::string(kModule), e.what()));
  } catch (const std::bad_alloc&) {
    return record(qqc::Error(ErrorCode::kCapacity, std::string(kModule), "out of memory"));
  } catch (const std::exception& e) {
    return record(qqc::Error(ErrorCode::kInternal, std::string(kModule), e.what()));
  } catch (...) {
    return record(qqc::Error(ErrorCode::kInternal, std::string(kModule), "unknown exception"));
  }
}

void need(const void* p, const char* what) {
  qqc::require(p != nullptr, ErrorCode::kInvalidArgument, kModule,
               std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::filesystem::path path_or_empty(const char* p) {
  return p ? std::filesystem::path(p) : std::filesystem::path();
}

qqc::harness::RunOptions run_options(const char* resource_dir) {
  qqc::harness::RunOptions o;
  o.resource_dir = path_or_empty(resource_dir);
  return o;
}

json kernel_report_json(const qqc::kernel::KernelReport& r) {
  return json{{"max_asymmetry", r.max_asymmetry},
              {"max_diagonal_deviation", r.max_diagonal_deviation},
              {"min_entry", r.min_entry},
              {"max_entry", r.max_entry},
              {"min_eigenvalue", r.min_eigenvalue},
              {"pass", r.pass},
              {"failures", r.failures}};
}

std::string records_tsv(const std::vector<qqc::dataset::QuestionRecord>& recs,
                        const std::vector<int>& labels) {
  std::string out = "question\tdomain\tlabel\n";
  for (std::size_t i = 0; i < recs.size(); ++i)
    out += recs[i].question + "\t" + recs[i].domain + "\t" + std::to_string(labels[i]) + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* qqc_version(void) { return QQC_VERSION_STRING; }

const char* qqc_last_error(void) { return g_last_error.c_str(); }

void qqc_string_free(char* s) { std::free(s); }

qqc_status qqc_config_from_json(const char* text, const char* base_dir, qqc_config** out) {
  return guard([&] {
    need(text, "json");
    need(out, "out");
    *out = nullptr;
    auto cfg = qqc::harness::config_from_json(json::parse(text), path_or_empty(base_dir));
    *out = new qqc_config{std::move(cfg)};
  });
}

qqc_status qqc_config_load(const char* path, qqc_config** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = nullptr;
    *out = new qqc_config{qqc::harness::load_config(path)};
  });
}

qqc_status qqc_config_to_json(const qqc_config* config, char** out) {
  return guard([&] {
    need(config, "config");
    need(out, "out");
    *out = dup_string(qqc::harness::config_to_json(config->value).dump(2));
  });
}

void qqc_config_free(qqc_config* config) { delete config; }

qqc_status qqc_experiment_run(const qqc_config* config, const char* resource_dir,
                              qqc_result** out) {
  return guard([&] {
    need(config, "config");
    need(out, "out");
    *out = nullptr;
    auto result = qqc::harness::run_experiment(config->value, run_options(resource_dir));
    *out = new qqc_result{std::move(result)};
  });
}

qqc_status qqc_result_load(const char* result_dir, qqc_result** out) {
  return guard([&] {
    need(result_dir, "result_dir");
    need(out, "out");
    *out = nullptr;
    *out = new qqc_result{qqc::harness::load_result(result_dir)};
  });
}

qqc_status qqc_result_to_json(const qqc_result* result, char** out) {
  return guard([&] {
    need(result, "result");
    need(out, "out");
    *out = dup_string(result->value.to_json().dump(2));
  });
}

qqc_status qqc_result_accuracy(const qqc_result* result, double* train_accuracy,
                               double* test_accuracy) {
  return guard([&] {
    need(result, "result");
    if (train_accuracy) *train_accuracy = result->value.train_accuracy;
    if (test_accuracy) *test_accuracy = result->value.test_accuracy;
  });
}

qqc_status qqc_result_output_dir(const qqc_result* result, char** out) {
  return guard([&] {
    need(result, "result");
    need(out, "out");
    *out = dup_string(result->value.output_dir.string());
  });
}

void qqc_result_free(qqc_result* result) { delete result; }

qqc_status qqc_sweep_run(const char* sweep_path, const char* output_root,
                         const char* resource_dir, unsigned jobs, char** summary_json) {
  return guard([&] {
    need(sweep_path, "sweep_path");
    const auto configs = qqc::harness::load_sweep_file(sweep_path);
    qqc::harness::SweepOptions options;
    options.run = run_options(resource_dir);
    options.output_root = output_root && *output_root ? std::filesystem::path(output_root)
                                                      : qqc::harness::default_output_root();
    options.jobs = jobs == 0 ? 1 : jobs;
    const auto rows = qqc::harness::run_sweep(configs, options);
    const auto written = qqc::harness::write_sweep_outputs(rows, options.output_root);
    if (!summary_json) return;
    json summary{{"experiments", rows.size()}};
    std::size_t failed = 0;
    json list = json::array();
    for (const auto& row : rows) {
      json item{{"name", row.config.name}, {"exp_no", row.config.exp_no}};
      if (row.result) {
        item["status"] = "ok";
        item["test_accuracy"] = row.result->test_accuracy;
        item["output_dir"] = row.result->output_dir.string();
      } else {
        ++failed;
        item["status"] = "failed";
        item["error"] = json::parse(row.error_json);
      }
      list.push_back(std::move(item));
    }
    summary["failed"] = failed;
    summary["rows"] = std::move(list);
    json files = json::array();
    for (const auto& p : written) files.push_back(p.string());
    summary["outputs"] = std::move(files);
    *summary_json = dup_string(summary.dump(2));
  });
}

qqc_status qqc_report(const char* results_dir, char** report) {
  return guard([&] {
    need(results_dir, "results_dir");
    need(report, "report");
    *report = dup_string(
        qqc::harness::build_report(qqc::harness::collect_results(results_dir)));
  });
}

qqc_status qqc_export_predictions(const char* result_dir, const char* format,
                                  const char* out_path, size_t* rows) {
  return guard([&] {
    need(result_dir, "result_dir");
    need(out_path, "out_path");
    const std::string name = format ? format : "tsv";
    const auto fmt = qqc::harness::parse_prediction_format(name);
    qqc::require(fmt.has_value(), ErrorCode::kInvalidArgument, kModule,
                 "unknown prediction format '" + name + "' (expected tsv or jsonl)");
    const auto n = qqc::harness::export_predictions(result_dir, *fmt, out_path);
    if (rows) *rows = n;
  });
}

qqc_status qqc_featurize(const char* records_path, const char* format,
                         const char* resource_dir, const char* out_path, size_t* rows) {
  return guard([&] {
    need(records_path, "records_path");
    need(out_path, "out_path");
    const auto table = qqc::harness::featurize_records_tsv(
        records_path, format ? format : "", path_or_empty(resource_dir));
    const std::filesystem::path out(out_path);
    if (!out.parent_path().empty()) std::filesystem::create_directories(out.parent_path());
    qqc::harness::write_file_atomic(out, table);
    if (rows) {
      std::size_t lines = 0;
      for (char c : table) lines += c == '\n';
      *rows = lines - 1;
    }
  });
}

qqc_status qqc_dataset_build(const char* records_path, const char* format, const char* class_a,
                             const char* class_b, uint64_t seed, const char* out_dir,
                             char** manifest_json) {
  return guard([&] {
    need(records_path, "records_path");
    need(class_a, "class_a");
    need(class_b, "class_b");
    const std::filesystem::path path(records_path);
    auto fmt = qqc::dataset::format_for_path(path);
    if (format && *format) {
      const auto parsed = qqc::dataset::parse_format(format);
      qqc::require(parsed.has_value(), ErrorCode::kInvalidArgument, kModule,
                   std::string("unknown record format '") + format + "'");
      fmt = *parsed;
    }
    const auto records = qqc::dataset::load_records(path, fmt);
    const auto ds = qqc::dataset::build_experiment_dataset(records, class_a, class_b, seed);
    auto manifest = ds.manifest();
    manifest["records_loaded"] = records.size();
    json per_domain = json::object();
    for (const auto& r : records) per_domain[r.domain] = per_domain.value(r.domain, 0) + 1;
    manifest["records_per_domain"] = per_domain;
    if (out_dir) {
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      qqc::harness::write_file_atomic(dir / "train.tsv", records_tsv(ds.train, ds.train_labels));
      qqc::harness::write_file_atomic(dir / "test.tsv", records_tsv(ds.test, ds.test_labels));
      qqc::harness::write_file_atomic(dir / "manifest.json", manifest.dump(2) + "\n");
    }
    if (manifest_json) *manifest_json = dup_string(manifest.dump(2));
  });
}

qqc_status qqc_kernel_compute(const qqc_config* config, const char* resource_dir,
                              const char* out_dir, char** report_json) {
  return guard([&] {
    need(config, "config");
    const auto& cfg = config->value;
    const auto data = qqc::harness::prepare_data(cfg, run_options(resource_dir));
    const qqc::kernel::KernelMode mode{cfg.kernel_shots, cfg.seed};
    const auto k_train = qqc::kernel::train_kernel_matrix(cfg.feature_map, data.x_train, mode);
    const auto k_test =
        qqc::kernel::test_kernel_matrix(cfg.feature_map, data.x_train, data.x_test, mode);
    auto report = kernel_report_json(qqc::kernel::validate_kernel(k_train));
    report["train_shape"] = {k_train.values.rows(), k_train.values.cols()};
    report["test_shape"] = {k_test.values.rows(), k_test.values.cols()};
    const std::filesystem::path dir =
        out_dir ? std::filesystem::path(out_dir) : qqc::harness::output_dir_for(cfg);
    std::filesystem::create_directories(dir);
    qqc::kernel::save_kernel(dir / "kernel_train.qkm", k_train);
    qqc::kernel::save_kernel(dir / "kernel_test.qkm", k_test);
    qqc::harness::write_file_atomic(dir / "kernel_report.json", report.dump(2) + "\n");
    if (report_json) *report_json = dup_string(report.dump(2));
  });
}

qqc_status qqc_kernel_load(const char* path, qqc_kernel** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = nullptr;
    *out = new qqc_kernel{qqc::kernel::load_kernel(path)};
  });
}

qqc_status qqc_kernel_shape(const qqc_kernel* kernel, size_t* rows, size_t* cols) {
  return guard([&] {
    need(kernel, "kernel");
    if (rows) *rows = kernel->value.values.rows();
    if (cols) *cols = kernel->value.values.cols();
  });
}

qqc_status qqc_kernel_get(const qqc_kernel* kernel, size_t row, size_t col, double* value) {
  return guard([&] {
    need(kernel, "kernel");
    need(value, "value");
    const auto& m = kernel->value.values;
    qqc::require(row < m.rows() && col < m.cols(), ErrorCode::kDimension, kModule,
                 "kernel index (" + std::to_string(row) + ", " + std::to_string(col) +
                     ") outside " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    *value = m(row, col);
  });
}

qqc_status qqc_kernel_validate(const qqc_kernel* kernel, char** report_json) {
  return guard([&] {
    need(kernel, "kernel");
    need(report_json, "report_json");
    const auto report = qqc::kernel::validate_kernel(kernel->value);
    *report_json = dup_string(kernel_report_json(report).dump(2));
  });
}

void qqc_kernel_free(qqc_kernel* kernel) { delete kernel; }

}  // extern "C"
