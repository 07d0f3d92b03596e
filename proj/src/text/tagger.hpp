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
#ifndef QQC_TEXT_TAGGER_HPP
#define QQC_TEXT_TAGGER_HPP

#include <string>
#include <utility>
#include <vector>

#include "text/resources.hpp"

namespace qqc::text {

struct TaggedToken {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::kOther;
};

/// Irregular table first, then -ies/-ied/-es/-s/-ing/-ed stripping. A stem is
/// accepted only when the lexicon knows it (as NOUN or VERB for plural forms,
/// as VERB for -ing/-ed), trying stem+"e" and an undoubled final consonant.
std::string lemmatize(const std::string& word, const TextResources& res);

/// Lexicon lookup (primary tag), with two context rules for ambiguous words:
/// after "to", a modal or a form of "do" prefer VERB; after a determiner,
/// preposition or adjective prefer NOUN. Unknown words fall back to suffix
/// rules and default to NOUN; numerals are OTHER.
std::vector<TaggedToken> tag_pos(const std::vector<std::string>& tokens,
                                 const TextResources& res);

/// (content, noncontent); content = NOUN, VERB, ADJ or ADV.
std::pair<int, int> count_content(const std::vector<TaggedToken>& tagged);

/// Lemmas of tokens that are neither stopwords nor numerals, in order.
std::vector<std::string> extract_keywords(const std::vector<std::string>& tokens,
                                          const TextResources& res);

/// how=1 what=2 when=3 where=4 which=5 who=6, 7 for two or more distinct
/// wh-words, 0 when none occurs.
int extract_wh(const std::vector<std::string>& tokens);

/// Surfaces of NOUN tokens, in order.
std::vector<std::string> extract_nouns(const std::vector<TaggedToken>& tagged);

int count_verbs(const std::vector<TaggedToken>& tagged);

}  // namespace qqc::text

#endif  // QQC_TEXT_TAGGER_HPP
