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

#include "text/tokenizer.hpp"

#include <cctype>

#include "common/error.hpp"

namespace qqc::text {

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

std::string clean(std::string_view raw) {
  std::string s;
  s.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(raw[i]);
    // U+2019 right single quotation mark counts as an apostrophe.
    if (c == 0xE2 && i + 2 < raw.size() && static_cast<unsigned char>(raw[i + 1]) == 0x80 &&
        static_cast<unsigned char>(raw[i + 2]) == 0x99) {
      s.push_back('\'');
      i += 2;
      continue;
    }
    s.push_back(static_cast<char>(std::tolower(c)));
  }
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (is_word_char(c)) {
      out.push_back(static_cast<char>(c));
    } else if ((c == '-' || c == '\'') && !out.empty() &&
               is_word_char(static_cast<unsigned char>(out.back())) && i + 1 < s.size() &&
               is_word_char(static_cast<unsigned char>(s[i + 1]))) {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view question) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < question.size()) {
    while (i < question.size() && std::isspace(static_cast<unsigned char>(question[i]))) ++i;
    const std::size_t start = i;
    while (i < question.size() && !std::isspace(static_cast<unsigned char>(question[i]))) ++i;
    if (i > start) {
      auto t = clean(question.substr(start, i - start));
      if (!t.empty()) tokens.push_back(std::move(t));
    }
  }
  require(!tokens.empty(), ErrorCode::kInvalidArgument, "question-features",
          "question has no tokens: '" + std::string(question) + "'");
  return tokens;
}

bool is_numeric_token(std::string_view token) {
  bool digit = false;
  for (char c : token) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '-' && c != '\'') {
      return false;
    }
  }
  return digit;
}

}  // namespace qqc::text
