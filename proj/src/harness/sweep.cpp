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
#include "harness/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <thread>

#include "common/error.hpp"
#include "common/parallel.hpp"

namespace qqc::harness {

namespace {

constexpr std::string_view kModule = "experiment-harness";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_field(cells[i]);
  }
  return out + "\n";
}

std::string percent(double accuracy) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * accuracy);
  return buf;
}

std::string fixed(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

int exp_number(const SweepRow& row, std::size_t index) {
  return row.config.exp_no > 0 ? row.config.exp_no : static_cast<int>(index + 1);
}

std::string optional_cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa <= 0.0 || sbb <= 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

int configured_depth(const ExperimentResult& r) {
  return r.depth.fm_reps + r.depth.qc_reps.value_or(0);
}

std::string row_label(const ExperimentResult& r) {
  std::string s = r.config.name + " (FM reps " + std::to_string(r.depth.fm_reps);
  if (r.depth.qc_reps) s += ", QC reps " + std::to_string(*r.depth.qc_reps);
  return s + ", depth " + std::to_string(r.depth.total_circuit_depth) + ")";
}

}  // namespace

std::vector<SweepRow> run_sweep(const std::vector<ExperimentConfig>& configs,
                                const SweepOptions& options) {
  require(!configs.empty(), ErrorCode::kInvalidArgument, kModule, "sweep is empty");
  const auto root = options.output_root.empty() ? default_output_root() : options.output_root;
  std::vector<SweepRow> rows(configs.size());
  parallel_for(
      configs.size(),
      [&](std::size_t i) {
        rows[i].config = configs[i];
        if (rows[i].config.output_dir.empty())
          rows[i].config.output_dir = (root / configs[i].name).string();
        try {
          rows[i].result = run_experiment(rows[i].config, options.run);
        } catch (const Error& e) {
          rows[i].error_json = e.to_json();
        } catch (const std::exception& e) {
          rows[i].error_json =
              Error(ErrorCode::kInternal, std::string(kModule), e.what()).to_json();
        }
      },
      std::max(1u, options.jobs));
  return rows;
}

std::string pauli_combination(const std::vector<std::string>& words) {
  std::string s = "[";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) s += ", ";
    s += "'" + words[i] + "'";
  }
  return s + "]";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = csv_line(
      {"exp_no", "name", "classifier", "features", "fm", "entanglement", "fm_reps",
       "fm_combination", "qc_reps", "fm_circuit_depth", "qc_circuit_depth",
       "total_circuit_depth", "train_accuracy", "test_accuracy", "status", "error"});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& c = rows[i].config;
    const auto depth = compute_depths(c);
    const auto& r = rows[i].result;
    out += csv_line({std::to_string(exp_number(rows[i], i)), c.name,
                     std::string(classifier_name(c.classifier)), std::to_string(c.feature_set),
                     "PauliFeatureMap",
                     std::string(encoding::entanglement_name(c.feature_map.entanglement)),
                     std::to_string(depth.fm_reps),
                     pauli_combination(c.feature_map.pauli_strings),
                     optional_cell(depth.qc_reps), std::to_string(depth.fm_circuit_depth),
                     optional_cell(depth.qc_circuit_depth),
                     std::to_string(depth.total_circuit_depth),
                     r ? fixed(r->train_accuracy, 6) : "", r ? fixed(r->test_accuracy, 6) : "",
                     r ? "ok" : "failed", rows[i].error_json});
  }
  return out;
}

std::string qsvm_table_csv(const std::vector<SweepRow>& rows) {
  std::string out = csv_line({"Exp no.", "No. of Features", "FM", "Entanglement", "FM Depth",
                              "FM Combination", "Testing Accuracy"});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& c = rows[i].config;
    if (c.classifier != Classifier::kQsvm) continue;
    const auto& r = rows[i].result;
    out += csv_line({std::to_string(exp_number(rows[i], i)), std::to_string(c.feature_set),
                     "PauliFM",
                     std::string(encoding::entanglement_name(c.feature_map.entanglement)),
                     std::to_string(c.feature_map.reps),
                     pauli_combination(c.feature_map.pauli_strings),
                     r ? percent(r->test_accuracy) : "ERROR"});
  }
  return out;
}

std::string vqc_table_csv(const std::vector<SweepRow>& rows) {
  std::string out = csv_line({"Exp no.", "Features", "FM", "Entanglement", "FM depth",
                              "FM combination", "QC depth", "Testing Accuracy"});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& c = rows[i].config;
    if (c.classifier != Classifier::kVqc) continue;
    const auto& r = rows[i].result;
    out += csv_line({std::to_string(exp_number(rows[i], i)), std::to_string(c.feature_set),
                     "Pauli", std::string(encoding::entanglement_name(c.feature_map.entanglement)),
                     std::to_string(c.feature_map.reps),
                     pauli_combination(c.feature_map.pauli_strings),
                     std::to_string(c.ansatz->reps), r ? percent(r->test_accuracy) : "ERROR"});
  }
  return out;
}

std::string depth_series_csv(const std::vector<SweepRow>& rows) {
  std::vector<const ExperimentResult*> ok;
  for (const auto& row : rows)
    if (row.result) ok.push_back(&*row.result);
  std::stable_sort(ok.begin(), ok.end(), [](const auto* a, const auto* b) {
    return std::tuple(a->config.classifier, a->depth.total_circuit_depth, a->config.feature_set) <
           std::tuple(b->config.classifier, b->depth.total_circuit_depth, b->config.feature_set);
  });
  std::string out = csv_line({"classifier", "features", "fm_reps", "qc_reps",
                              "total_circuit_depth", "test_accuracy"});
  for (const auto* r : ok)
    out += csv_line({std::string(classifier_name(r->config.classifier)),
                     std::to_string(r->config.feature_set), std::to_string(r->depth.fm_reps),
                     optional_cell(r->depth.qc_reps), std::to_string(r->depth.total_circuit_depth),
                     fixed(r->test_accuracy, 6)});
  return out;
}

std::string feature_series_csv(const std::vector<SweepRow>& rows) {
  std::map<std::pair<Classifier, int>, std::pair<double, int>> best;
  for (const auto& row : rows) {
    if (!row.result) continue;
    auto key = std::pair(row.config.classifier, row.config.feature_set);
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, std::pair(row.result->test_accuracy, 1));
    } else {
      it->second.first = std::max(it->second.first, row.result->test_accuracy);
      ++it->second.second;
    }
  }
  std::string out = csv_line({"classifier", "features", "best_test_accuracy", "experiments"});
  for (const auto& [key, v] : best)
    out += csv_line({std::string(classifier_name(key.first)), std::to_string(key.second),
                     fixed(v.first, 6), std::to_string(v.second)});
  return out;
}

std::vector<std::filesystem::path> write_sweep_outputs(const std::vector<SweepRow>& rows,
                                                       const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto emit = [&](const char* name, const std::string& content) {
    write_file_atomic(dir / name, content);
    written.push_back(dir / name);
  };
  emit("sweep_results.csv", sweep_csv(rows));
  const bool any_qsvm = std::any_of(rows.begin(), rows.end(), [](const auto& r) {
    return r.config.classifier == Classifier::kQsvm;
  });
  const bool any_vqc = std::any_of(rows.begin(), rows.end(), [](const auto& r) {
    return r.config.classifier == Classifier::kVqc;
  });
  if (any_qsvm) emit("qsvm_table.csv", qsvm_table_csv(rows));
  if (any_vqc) emit("vqc_table.csv", vqc_table_csv(rows));
  emit("depth_vs_accuracy.csv", depth_series_csv(rows));
  emit("features_vs_accuracy.csv", feature_series_csv(rows));
  return written;
}

DepthTrend depth_trend(const std::string& classifier, const std::vector<ExperimentResult>& rows) {
  DepthTrend t;
  t.classifier = classifier;
  t.n = rows.size();
  std::vector<double> depth, acc;
  std::set<int> depths;
  for (const auto& r : rows) {
    depth.push_back(configured_depth(r));
    acc.push_back(r.test_accuracy);
    depths.insert(configured_depth(r));
  }
  t.distinct_depths = depths.size();
  if (depths.size() < 2) {
    t.statement = classifier + ": only one depth setting measured, no depth trend can be stated.";
    return t;
  }
  t.correlation = pearson(depth, acc);
  const int shortest = *depths.begin();
  double s_sum = 0.0, d_sum = 0.0;
  int s_n = 0, d_n = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(depth[i]) == shortest) {
      s_sum += acc[i];
      ++s_n;
    } else {
      d_sum += acc[i];
      ++d_n;
    }
  }
  t.short_depth_accuracy = s_sum / s_n;
  t.deeper_accuracy = d_sum / d_n;
  const std::string numbers = " (mean test accuracy " + percent(t.short_depth_accuracy) +
                              "% at the shortest depth vs " + percent(t.deeper_accuracy) +
                              "% deeper; Pearson r = " + fixed(t.correlation, 3) + ")";
  if (t.short_depth_accuracy > t.deeper_accuracy && t.correlation < -0.1) {
    t.statement = classifier + " performs better on short-depth circuits" + numbers + ".";
  } else if (t.short_depth_accuracy < t.deeper_accuracy && t.correlation > 0.1) {
    t.statement = classifier + " performs better on deeper circuits" + numbers + ".";
  } else {
    t.statement = classifier + " shows no consistent depth trend" + numbers + ".";
  }
  return t;
}

std::vector<ExperimentResult> collect_results(const std::filesystem::path& dir) {
  require(std::filesystem::is_directory(dir), ErrorCode::kIo, kModule,
          "not a directory: " + dir.string());
  std::vector<std::filesystem::path> found;
  if (std::filesystem::exists(dir / "result.json")) found.push_back(dir);
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().filename() == "result.json" &&
        entry.path().parent_path() != dir &&
        entry.path().parent_path().filename().string().rfind(".", 0) != 0)
      found.push_back(entry.path().parent_path());
  }
  std::sort(found.begin(), found.end());
  std::vector<ExperimentResult> out;
  for (const auto& p : found) out.push_back(load_result(p));
  return out;
}

std::string build_report(const std::vector<ExperimentResult>& results) {
  require(!results.empty(), ErrorCode::kData, kModule, "no results found");
  std::map<int, std::vector<const ExperimentResult*>> by_features;
  for (const auto& r : results) by_features[r.config.feature_set].push_back(&r);

  std::string out = "# QSVM vs VQC results\n\n";
  out += std::to_string(results.size()) + " result(s), " + std::to_string(by_features.size()) +
         " feature group(s).\n";

  for (const auto& [features, group] : by_features) {
    out += "\n## " + std::to_string(features) + " features\n\n";
    std::vector<const ExperimentResult*> qsvm, vqc;
    for (const auto* r : group)
      (r->config.classifier == Classifier::kQsvm ? qsvm : vqc).push_back(r);
    auto by_depth = [](const auto* a, const auto* b) {
      return std::tuple(configured_depth(*a), a->config.name) <
             std::tuple(configured_depth(*b), b->config.name);
    };
    std::sort(qsvm.begin(), qsvm.end(), by_depth);
    std::sort(vqc.begin(), vqc.end(), by_depth);

    if (qsvm.empty() || vqc.empty()) {
      const auto& only = qsvm.empty() ? vqc : qsvm;
      const std::string name = qsvm.empty() ? "VQC" : "QSVM";
      out += "| " + name + " | Testing Accuracy (%) |\n|---|---|\n";
      for (const auto* r : only)
        out += "| " + row_label(*r) + " | " + percent(r->test_accuracy) + " |\n";
      continue;
    }
    out += "| FM combination | FM reps | QSVM | QSVM acc. (%) | VQC | QC reps | FM depth | QC "
           "depth | Total | VQC acc. (%) |\n|---|---|---|---|---|---|---|---|---|---|\n";
    std::set<const ExperimentResult*> matched;
    for (const auto* q : qsvm) {
      for (const auto* v : vqc) {
        if (v->config.feature_map.reps != q->config.feature_map.reps ||
            v->config.feature_map.pauli_strings != q->config.feature_map.pauli_strings ||
            v->config.feature_map.entanglement != q->config.feature_map.entanglement)
          continue;
        matched.insert(q);
        matched.insert(v);
        out += "| " + pauli_combination(q->config.feature_map.pauli_strings) + " | " +
               std::to_string(q->depth.fm_reps) + " | " + q->config.name + " | " +
               percent(q->test_accuracy) + " | " + v->config.name + " | " +
               optional_cell(v->depth.qc_reps) + " | " + std::to_string(v->depth.fm_circuit_depth) +
               " | " + optional_cell(v->depth.qc_circuit_depth) + " | " +
               std::to_string(v->depth.total_circuit_depth) + " | " + percent(v->test_accuracy) +
               " |\n";
      }
    }
    std::string unmatched;
    for (const auto* r : group)
      if (!matched.count(r))
        unmatched += "- " + std::string(classifier_name(r->config.classifier)) + " " +
                     row_label(*r) + ": " + percent(r->test_accuracy) + "%\n";
    if (!unmatched.empty()) out += "\nUnmatched:\n" + unmatched;
  }

  out += "\n## Depth trend\n\n";
  std::vector<ExperimentResult> qsvm_rows, vqc_rows;
  for (const auto& r : results)
    (r.config.classifier == Classifier::kQsvm ? qsvm_rows : vqc_rows).push_back(r);
  std::vector<DepthTrend> trends;
  if (!qsvm_rows.empty()) trends.push_back(depth_trend("QSVM", qsvm_rows));
  if (!vqc_rows.empty()) trends.push_back(depth_trend("VQC", vqc_rows));
  for (const auto& t : trends) out += "- " + t.statement + "\n";
  if (trends.size() == 2) {
    const bool both_short = std::all_of(trends.begin(), trends.end(), [](const DepthTrend& t) {
      return t.distinct_depths >= 2 && t.short_depth_accuracy > t.deeper_accuracy &&
             t.correlation < -0.1;
    });
    out += std::string("- Both classifiers favour short-depth circuits on these results: ") +
           (both_short ? "yes" : "no") + ".\n";
  }
  return out;
}

}  // namespace qqc::harness
