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
#include "text/ngram.hpp"

#include <algorithm>
#include <cmath>

#include "common/error.hpp"

namespace qqc::text {

namespace {
constexpr std::string_view kModule = "question-features";
constexpr char kSep = '\x1f';
}  // namespace

std::string NgramModel::join(std::span<const std::string> parts) {
  std::string key;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) key.push_back(kSep);
    key += parts[i];
  }
  return key;
}

std::string NgramModel::map(const std::string& w) const {
  if (w == kBos || w == kEos) return w;
  return vocab_.count(w) ? w : std::string(kUnk);
}

NgramModel::NgramModel(int order, const std::vector<std::vector<std::string>>& sentences)
    : order_(order) {
  require(order >= 1 && order <= 5, ErrorCode::kInvalidArgument, kModule,
          "n-gram order must be in 1..5");
  require(!sentences.empty(), ErrorCode::kInvalidArgument, kModule,
          "n-gram training corpus is empty");
  for (const auto& s : sentences)
    for (const auto& w : s) vocab_.insert(w);
  predictable_.assign(vocab_.begin(), vocab_.end());
  std::sort(predictable_.begin(), predictable_.end());
  predictable_.emplace_back(kUnk);
  if (order_ >= 2) predictable_.emplace_back(kEos);

  const std::size_t h = static_cast<std::size_t>(order_ - 1);
  for (const auto& s : sentences) {
    std::vector<std::string> padded(h, kBos);
    padded.insert(padded.end(), s.begin(), s.end());
    if (order_ >= 2) padded.emplace_back(kEos);
    for (std::size_t pos = h; pos < padded.size(); ++pos) {
      std::span<const std::string> gram(padded.data() + pos - h, h + 1);
      ++counts_[join(gram)];
      ++context_counts_[join(gram.first(h))];
    }
  }
}

std::uint64_t NgramModel::count(std::span<const std::string> ngram) const {
  const auto it = counts_.find(join(ngram));
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t NgramModel::context_count(std::span<const std::string> context) const {
  const auto it = context_counts_.find(join(context));
  return it == context_counts_.end() ? 0 : it->second;
}

double NgramModel::probability(std::span<const std::string> context,
                               const std::string& word) const {
  require(context.size() == static_cast<std::size_t>(order_ - 1), ErrorCode::kDimension,
          kModule, "context length must be order-1");
  std::vector<std::string> gram;
  gram.reserve(context.size() + 1);
  for (const auto& c : context) gram.push_back(map(c));
  gram.push_back(map(word));
  const double num = static_cast<double>(count(gram)) + 1.0;
  const double den = static_cast<double>(context_count(std::span(gram).first(context.size()))) +
                     static_cast<double>(vocabulary_size());
  return num / den;
}

double NgramModel::mean_log_probability(const std::vector<std::string>& tokens) const {
  require(!tokens.empty(), ErrorCode::kInvalidArgument, kModule,
          "cannot score an empty question");
  const std::size_t h = static_cast<std::size_t>(order_ - 1);
  std::vector<std::string> padded(h, kBos);
  padded.insert(padded.end(), tokens.begin(), tokens.end());
  if (order_ >= 2) padded.emplace_back(kEos);
  double acc = 0.0;
  std::size_t n = 0;
  for (std::size_t pos = h; pos < padded.size(); ++pos, ++n)
    acc += std::log(probability(std::span<const std::string>(padded.data() + pos - h, h),
                                padded[pos]));
  return acc / static_cast<double>(n);
}

NgramModels train_ngram_models(const std::vector<std::vector<std::string>>& sentences) {
  NgramModels models;
  for (int n = 1; n <= 5; ++n) models[static_cast<std::size_t>(n - 1)] = NgramModel(n, sentences);
  return models;
}

}  // namespace qqc::text
