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
#ifndef QQC_TEXT_FEATURES_HPP
#define QQC_TEXT_FEATURES_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "text/ngram.hpp"
#include "text/resources.hpp"

namespace qqc::text {

struct QuestionFeatures {
  int content_count = 0;
  int noncontent_count = 0;
  double keyword_score = 0.0;
  int wh_code = 0;
  int noun_count = 0;
  int verb_count = 0;
  std::array<double, 5> ngram_logp{};
  int label = 0;
  std::string raw;
  std::vector<std::string> keywords;
  std::vector<std::string> nouns;
};

/// Slot names in vector order: content, noncontent, keywords, wh, nouns,
/// verbs, 1gram .. 5gram.
const std::array<std::string_view, 11>& feature_names();

/// Feature groups 2, 4, 5, 7 and 11 are prefixes of the full vector.
bool valid_feature_set(int feature_set);

std::vector<double> feature_vector(const QuestionFeatures& f, int feature_set);

QuestionFeatures featurize(const std::string& question, int label, const NgramModels& models,
                           const TextResources& res);

}  // namespace qqc::text

#endif  // QQC_TEXT_FEATURES_HPP
