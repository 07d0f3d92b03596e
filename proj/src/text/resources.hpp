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

#ifndef QQC_TEXT_RESOURCES_HPP
#define QQC_TEXT_RESOURCES_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace qqc::text {

enum class Pos { kNoun, kVerb, kAdj, kAdv, kOther };

std::string_view pos_name(Pos pos);
std::optional<Pos> parse_pos(std::string_view name);

struct TextResources {
  std::unordered_set<std::string> stopwords;
  /// Candidate tags per word, primary tag first.
  std::unordered_map<std::string, std::vector<Pos>> lexicon;
  std::unordered_map<std::string, std::string> irregular;

  bool is_stopword(const std::string& w) const { return stopwords.count(w) > 0; }
  const std::vector<Pos>* tags(const std::string& w) const;
  bool has_tag(const std::string& w, Pos pos) const;
};

/// $QQC_RESOURCE_DIR if set, else the directory configured at build time.
std::filesystem::path default_resource_dir();

/// Reads stopwords.txt, lexicon.tsv and irregular_lemmas.tsv from `dir`.
TextResources load_resources(const std::filesystem::path& dir);

}  // namespace qqc::text

#endif  // QQC_TEXT_RESOURCES_HPP
