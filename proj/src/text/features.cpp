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
#include "text/features.hpp"

#include "common/error.hpp"
#include "text/tagger.hpp"
#include "text/tokenizer.hpp"

namespace qqc::text {

const std::array<std::string_view, 11>& feature_names() {
  static constexpr std::array<std::string_view, 11> kNames = {
      "content_words", "noncontent_words", "keyword_count", "wh_code",
      "noun_count",    "verb_count",       "logp_1gram",    "logp_2gram",
      "logp_3gram",    "logp_4gram",       "logp_5gram"};
  return kNames;
}

bool valid_feature_set(int feature_set) {
  return feature_set == 2 || feature_set == 4 || feature_set == 5 || feature_set == 7 ||
         feature_set == 11;
}

std::vector<double> feature_vector(const QuestionFeatures& f, int feature_set) {
  require(valid_feature_set(feature_set), ErrorCode::kInvalidArgument, "question-features",
          "feature_set must be one of 2, 4, 5, 7, 11; got " + std::to_string(feature_set));
  std::vector<double> all = {static_cast<double>(f.content_count),
                             static_cast<double>(f.noncontent_count),
                             f.keyword_score,
                             static_cast<double>(f.wh_code),
                             static_cast<double>(f.noun_count),
                             static_cast<double>(f.verb_count)};
  all.insert(all.end(), f.ngram_logp.begin(), f.ngram_logp.end());
  all.resize(static_cast<std::size_t>(feature_set));
  return all;
}

QuestionFeatures featurize(const std::string& question, int label, const NgramModels& models,
                           const TextResources& res) {
  QuestionFeatures f;
  f.raw = question;
  f.label = label;
  const auto tokens = tokenize(question);
  const auto tagged = tag_pos(tokens, res);
  const auto [content, noncontent] = count_content(tagged);
  f.content_count = content;
  f.noncontent_count = noncontent;
  f.keywords = extract_keywords(tokens, res);
  f.keyword_score = static_cast<double>(f.keywords.size());
  f.wh_code = extract_wh(tokens);
  f.nouns = extract_nouns(tagged);
  f.noun_count = static_cast<int>(f.nouns.size());
  f.verb_count = count_verbs(tagged);
  for (std::size_t n = 0; n < models.size(); ++n)
    f.ngram_logp[n] = models[n].mean_log_probability(tokens);
  return f;
}

}  // namespace qqc::text
