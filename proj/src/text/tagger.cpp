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
#include "text/tagger.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string_view>

#include "text/tokenizer.hpp"

namespace qqc::text {

namespace {

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool one_of(const std::string& w, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool verb_trigger(const std::string& w) {
  return one_of(w, {"to", "can", "could", "will", "would", "shall", "should", "may", "might",
                    "must", "do", "does", "did", "didn't", "doesn't", "don't"});
}

bool noun_trigger(const std::string& w) {
  return one_of(w, {"the", "a", "an", "this", "that", "these", "those", "his", "her", "its",
                    "their", "our", "my", "your", "each", "every", "of", "in", "on", "at",
                    "by", "for", "with", "from", "into", "under", "over", "about", "between",
                    "through", "during", "before", "after", "against", "among", "within",
                    "without", "across", "behind", "beyond", "near", "upon", "toward",
                    "towards", "around", "via", "throughout"});
}

Pos suffix_tag(const std::string& w) {
  if (is_numeric_token(w)) return Pos::kOther;
  if (ends_with(w, "ly") && w.size() > 4) return Pos::kAdv;
  if ((ends_with(w, "ing") && w.size() > 5) || (ends_with(w, "ed") && w.size() > 4) ||
      ends_with(w, "ize") || ends_with(w, "ise") || ends_with(w, "ify"))
    return Pos::kVerb;
  for (std::string_view s : {"tion", "sion", "ment", "ness", "ity", "ism", "ist", "ship",
                             "ance", "ence", "logy", "graphy"})
    if (ends_with(w, s)) return Pos::kNoun;
  for (std::string_view s : {"al", "ic", "ous", "ive", "able", "ible", "ful", "less", "ish",
                             "ian", "ese", "ary"})
    if (ends_with(w, s) && w.size() > s.size() + 2) return Pos::kAdj;
  return Pos::kNoun;
}

std::string try_stem(const std::string& stem, const TextResources& res,
                     std::initializer_list<Pos> accept, bool allow_e, bool allow_undouble) {
  auto ok = [&](const std::string& s) {
    if (s.size() < 2) return false;
    for (Pos p : accept)
      if (res.has_tag(s, p)) return true;
    return false;
  };
  if (ok(stem)) return stem;
  if (allow_e && ok(stem + "e")) return stem + "e";
  if (allow_undouble && stem.size() >= 3 && stem.back() == stem[stem.size() - 2] &&
      !is_vowel(stem.back())) {
    const std::string u = stem.substr(0, stem.size() - 1);
    if (ok(u)) return u;
  }
  return {};
}

bool nominal(const std::string& w, const TextResources& res) {
  if (is_numeric_token(w)) return false;
  if (const auto* tags = res.tags(w)) return tags->front() == Pos::kNoun;
  return suffix_tag(w) == Pos::kNoun;
}

}  // namespace

std::string lemmatize(const std::string& word, const TextResources& res) {
  if (const auto it = res.irregular.find(word); it != res.irregular.end()) return it->second;
  const auto nominal = {Pos::kNoun, Pos::kVerb};
  const auto verbal = {Pos::kVerb};
  std::string s;
  const std::size_t n = word.size();
  if (ends_with(word, "ies") && n > 4 &&
      !(s = try_stem(word.substr(0, n - 3) + "y", res, nominal, false, false)).empty())
    return s;
  if (ends_with(word, "ied") && n > 4 &&
      !(s = try_stem(word.substr(0, n - 3) + "y", res, verbal, false, false)).empty())
    return s;
  if (ends_with(word, "es") && n > 3 &&
      !(s = try_stem(word.substr(0, n - 2), res, nominal, false, false)).empty())
    return s;
  if (ends_with(word, "s") && !ends_with(word, "ss") && n > 3 &&
      !(s = try_stem(word.substr(0, n - 1), res, nominal, false, false)).empty())
    return s;
  if (ends_with(word, "ing") && n > 4 &&
      !(s = try_stem(word.substr(0, n - 3), res, verbal, true, true)).empty())
    return s;
  if (ends_with(word, "ed") && n > 3 &&
      !(s = try_stem(word.substr(0, n - 2), res, verbal, true, true)).empty())
    return s;
  return word;
}

std::vector<TaggedToken> tag_pos(const std::vector<std::string>& tokens,
                                 const TextResources& res) {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& w = tokens[i];
    Pos pos;
    if (is_numeric_token(w)) {
      pos = Pos::kOther;
    } else if (const auto* tags = res.tags(w)) {
      pos = tags->front();
      if (tags->size() > 1 && i > 0) {
        const std::string& prev = tokens[i - 1];
        const auto has = [&](Pos p) {
          return std::find(tags->begin(), tags->end(), p) != tags->end();
        };
        if (verb_trigger(prev) && has(Pos::kVerb)) {
          pos = Pos::kVerb;
        } else if (has(Pos::kAdj) && i + 1 < tokens.size() && nominal(tokens[i + 1], res)) {
          pos = Pos::kAdj;
        } else if ((noun_trigger(prev) || out.back().pos == Pos::kAdj) && has(Pos::kNoun)) {
          pos = Pos::kNoun;
        }
      }
    } else {
      pos = suffix_tag(w);
    }
    out.push_back({w, lemmatize(w, res), pos});
  }
  return out;
}

std::pair<int, int> count_content(const std::vector<TaggedToken>& tagged) {
  int content = 0;
  for (const auto& t : tagged) content += t.pos != Pos::kOther;
  return {content, static_cast<int>(tagged.size()) - content};
}

std::vector<std::string> extract_keywords(const std::vector<std::string>& tokens,
                                          const TextResources& res) {
  std::vector<std::string> out;
  for (const auto& t : tokens)
    if (!res.is_stopword(t) && !is_numeric_token(t)) out.push_back(lemmatize(t, res));
  return out;
}

int extract_wh(const std::vector<std::string>& tokens) {
  static constexpr std::array<std::string_view, 6> kWh = {"how",   "what",  "when",
                                                          "where", "which", "who"};
  int first = 0;
  unsigned seen = 0;
  for (const auto& t : tokens) {
    for (std::size_t k = 0; k < kWh.size(); ++k) {
      if (t == kWh[k]) {
        if (first == 0) first = static_cast<int>(k) + 1;
        seen |= 1U << k;
      }
    }
  }
  if (std::popcount(seen) >= 2) return 7;
  return first;
}

std::vector<std::string> extract_nouns(const std::vector<TaggedToken>& tagged) {
  std::vector<std::string> out;
  for (const auto& t : tagged)
    if (t.pos == Pos::kNoun) out.push_back(t.surface);
  return out;
}

int count_verbs(const std::vector<TaggedToken>& tagged) {
  return static_cast<int>(std::count_if(tagged.begin(), tagged.end(),
                                        [](const TaggedToken& t) { return t.pos == Pos::kVerb; }));
}

}  // namespace qqc::text
