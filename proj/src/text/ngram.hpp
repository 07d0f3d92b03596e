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
#ifndef QQC_TEXT_NGRAM_HPP
#define QQC_TEXT_NGRAM_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace qqc::text {

inline constexpr const char* kUnk = "<unk>";
inline constexpr const char* kBos = "<s>";
inline constexpr const char* kEos = "</s>";

/// Add-one smoothed n-gram model. Order 1 predicts the sentence's words over
/// V = words + UNK. Orders >= 2 pad each sentence with n-1 <s> and one </s>
/// and predict words and </s> over V = words + UNK + </s>.
class NgramModel {
 public:
  NgramModel() = default;
  NgramModel(int order, const std::vector<std::vector<std::string>>& sentences);

  int order() const noexcept { return order_; }
  std::size_t vocabulary_size() const noexcept { return predictable_.size(); }
  /// Every token the model can predict, UNK included.
  const std::vector<std::string>& predictable() const noexcept { return predictable_; }

  bool known(const std::string& w) const { return vocab_.count(w) > 0; }

  /// P(word | context); context holds the order-1 preceding tokens, and
  /// tokens outside the vocabulary map to UNK.
  double probability(std::span<const std::string> context, const std::string& word) const;

  std::uint64_t count(std::span<const std::string> ngram) const;
  std::uint64_t context_count(std::span<const std::string> context) const;

  /// Mean natural-log probability over the sentence's scoring positions.
  double mean_log_probability(const std::vector<std::string>& tokens) const;

 private:
  std::string map(const std::string& w) const;
  static std::string join(std::span<const std::string> parts);

  int order_ = 1;
  std::unordered_set<std::string> vocab_;
  std::vector<std::string> predictable_;
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::unordered_map<std::string, std::uint64_t> context_counts_;
};

using NgramModels = std::array<NgramModel, 5>;

/// Orders 1..5 fitted on the tokenized training questions.
NgramModels train_ngram_models(const std::vector<std::vector<std::string>>& sentences);

}  // namespace qqc::text

#endif  // QQC_TEXT_NGRAM_HPP
