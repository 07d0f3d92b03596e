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
#include "dataset/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numbers>
#include <numeric>
#include <set>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace qqc::dataset {

namespace {

constexpr std::string_view kModule = "dataset-io";

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void line_error(const std::filesystem::path& p, std::size_t line,
                             const std::string& what) {
  fail(ErrorCode::kParse, kModule, p.string() + ":" + std::to_string(line) + ": " + what);
}

void split_class(std::vector<std::size_t> idx, std::size_t keep, Rng& rng,
                 std::vector<std::size_t>& train, std::vector<std::size_t>& test) {
  rng.shuffle(idx);
  idx.resize(keep);
  const std::size_t n_train = keep * 4 / 5;
  train.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
  test.assign(idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
}

}  // namespace

const std::array<std::string_view, 10>& selqa_domains() {
  static constexpr std::array<std::string_view, 10> kDomains = {
      "Art", "Country", "Food", "Historical Events", "Movies",
      "Music", "Science", "Sport", "Travel", "TV"};
  return kDomains;
}

std::optional<std::string> canonical_domain(std::string_view name) {
  const auto key = lower(trim(name));
  for (auto d : selqa_domains())
    if (lower(d) == key) return std::string(d);
  return std::nullopt;
}

std::optional<RecordFormat> parse_format(std::string_view name) {
  const auto key = lower(name);
  if (key == "jsonl" || key == "json-lines" || key == "json") return RecordFormat::kJsonLines;
  if (key == "tsv") return RecordFormat::kTsv;
  return std::nullopt;
}

RecordFormat format_for_path(const std::filesystem::path& path) {
  return lower(path.extension().string()) == ".tsv" ? RecordFormat::kTsv
                                                    : RecordFormat::kJsonLines;
}

std::vector<QuestionRecord> load_records(const std::filesystem::path& path,
                                         RecordFormat format) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIo, kModule, "cannot open " + path.string());
  std::vector<QuestionRecord> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (trim(line).empty()) continue;
    QuestionRecord r;
    r.line = no;
    std::string domain;
    if (format == RecordFormat::kJsonLines) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        line_error(path, no, std::string("invalid JSON: ") + e.what());
      }
      if (!j.is_object() || !j.contains("question") || !j["question"].is_string() ||
          !j.contains("type") || !j["type"].is_string())
        line_error(path, no, "expected string fields \"question\" and \"type\"");
      r.question = j["question"].get<std::string>();
      domain = j["type"].get<std::string>();
      if (j.contains("split") && j["split"].is_string()) r.split = j["split"].get<std::string>();
    } else {
      std::vector<std::string> cols;
      std::size_t start = 0;
      while (true) {
        const auto tab = line.find('\t', start);
        cols.push_back(line.substr(start, tab == std::string::npos ? std::string::npos
                                                                   : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
      }
      if (cols.size() < 2 || cols.size() > 3)
        line_error(path, no, "expected question<TAB>domain[<TAB>split]");
      r.question = cols[0];
      domain = cols[1];
      if (cols.size() == 3) r.split = trim(cols[2]);
    }
    r.question = trim(r.question);
    if (r.question.empty()) line_error(path, no, "empty question");
    const auto canon = canonical_domain(domain);
    if (!canon) {
      fail(ErrorCode::kData, kModule,
           path.string() + ":" + std::to_string(no) + ": unknown domain '" + domain + "'");
    }
    r.domain = *canon;
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json ExperimentDataset::manifest() const {
  auto count = [](const std::vector<int>& labels, int which) {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), which));
  };
  nlohmann::json j;
  j["seed"] = seed;
  j["classes"] = {{{"label", 0}, {"domain", class_a}, {"available", class_a_available},
                   {"train", count(train_labels, 0)}, {"test", count(test_labels, 0)}},
                  {{"label", 1}, {"domain", class_b}, {"available", class_b_available},
                   {"train", count(train_labels, 1)}, {"test", count(test_labels, 1)}}};
  j["train_total"] = train.size();
  j["test_total"] = test.size();
  j["removed_count"] = removed_indices.size();
  j["removed_indices"] = removed_indices;
  j["cross_split_duplicates"] = cross_split_duplicates;
  return j;
}

ExperimentDataset build_experiment_dataset(const std::vector<QuestionRecord>& records,
                                           const std::string& class_a,
                                           const std::string& class_b, std::uint64_t seed) {
  const auto a = canonical_domain(class_a);
  const auto b = canonical_domain(class_b);
  require(a.has_value(), ErrorCode::kInvalidArgument, kModule, "unknown class '" + class_a + "'");
  require(b.has_value(), ErrorCode::kInvalidArgument, kModule, "unknown class '" + class_b + "'");
  require(*a != *b, ErrorCode::kInvalidArgument, kModule, "the two classes must differ");

  std::vector<std::size_t> idx_a, idx_b;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].domain == *a) idx_a.push_back(i);
    if (records[i].domain == *b) idx_b.push_back(i);
  }
  require(idx_a.size() >= 10, ErrorCode::kData, kModule,
          "class '" + *a + "' has " + std::to_string(idx_a.size()) + " records (need >= 10)");
  require(idx_b.size() >= 10, ErrorCode::kData, kModule,
          "class '" + *b + "' has " + std::to_string(idx_b.size()) + " records (need >= 10)");

  ExperimentDataset ds;
  ds.class_a = *a;
  ds.class_b = *b;
  ds.seed = seed;
  ds.class_a_available = idx_a.size();
  ds.class_b_available = idx_b.size();

  Rng rng(seed);
  const std::size_t keep = std::min(idx_a.size(), idx_b.size());
  auto& larger = idx_a.size() >= idx_b.size() ? idx_a : idx_b;
  if (larger.size() > keep) {
    auto shuffled = larger;
    rng.shuffle(shuffled);
    ds.removed_indices.assign(shuffled.begin() + static_cast<std::ptrdiff_t>(keep),
                              shuffled.end());
    std::sort(ds.removed_indices.begin(), ds.removed_indices.end());
    larger.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(keep));
    std::sort(larger.begin(), larger.end());
  }

  std::vector<std::size_t> train_a, test_a, train_b, test_b;
  split_class(idx_a, keep, rng, train_a, test_a);
  split_class(idx_b, keep, rng, train_b, test_b);

  auto assemble = [&](const std::vector<std::size_t>& xa, const std::vector<std::size_t>& xb,
                      std::vector<QuestionRecord>& recs, std::vector<int>& labels) {
    std::vector<std::pair<std::size_t, int>> items;
    for (auto i : xa) items.emplace_back(i, 0);
    for (auto i : xb) items.emplace_back(i, 1);
    rng.shuffle(items);
    for (auto [i, label] : items) {
      recs.push_back(records[i]);
      labels.push_back(label);
    }
  };
  assemble(train_a, train_b, ds.train, ds.train_labels);
  assemble(test_a, test_b, ds.test, ds.test_labels);

  std::set<std::string> train_questions;
  for (const auto& r : ds.train) train_questions.insert(r.question);
  std::set<std::string> dup;
  for (const auto& r : ds.test)
    if (train_questions.count(r.question)) dup.insert(r.question);
  ds.cross_split_duplicates.assign(dup.begin(), dup.end());
  return ds;
}

SyntheticDataset generate_synthetic(std::size_t n_per_class, int n_features,
                                    double separation, std::uint64_t seed) {
  require(n_per_class >= 2, ErrorCode::kInvalidArgument, kModule,
          "synthetic data needs n_per_class >= 2");
  require(n_features >= 1 && n_features <= 12, ErrorCode::kInvalidArgument, kModule,
          "synthetic n_features must be in 1..12");
  require(separation >= 0.0 && separation <= 1.0, ErrorCode::kInvalidArgument, kModule,
          "separation must be in [0, 1]");
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  const double sigma = (1.0 - separation) * kHalfPi;
  const auto nf = static_cast<std::size_t>(n_features);
  Rng rng(seed);

  std::vector<std::vector<double>> rows[2];
  for (int c = 0; c < 2; ++c) {
    const double center = c == 0 ? 0.0 : kHalfPi;
    for (std::size_t i = 0; i < n_per_class; ++i) {
      std::vector<double> row(nf);
      for (auto& v : row) v = std::clamp(center + sigma * rng.normal(), 0.0, kHalfPi);
      rows[c].push_back(std::move(row));
    }
  }
  const std::size_t n_train = n_per_class * 4 / 5;
  std::vector<std::pair<std::vector<double>, int>> train, test;
  for (int c = 0; c < 2; ++c)
    for (std::size_t i = 0; i < n_per_class; ++i)
      (i < n_train ? train : test).emplace_back(rows[c][i], c);
  rng.shuffle(train);
  rng.shuffle(test);

  SyntheticDataset ds;
  auto fill = [&](const auto& items, Matrix& x, std::vector<int>& y) {
    x = Matrix(items.size(), nf);
    for (std::size_t r = 0; r < items.size(); ++r) {
      std::copy(items[r].first.begin(), items[r].first.end(), x.row(r).begin());
      y.push_back(items[r].second);
    }
  };
  fill(train, ds.x_train, ds.y_train);
  fill(test, ds.x_test, ds.y_test);
  return ds;
}

}  // namespace qqc::dataset
