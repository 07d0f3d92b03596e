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

#ifndef QQC_TEXT_TOKENIZER_HPP
#define QQC_TEXT_TOKENIZER_HPP

#include <string>
#include <string_view>
#include <vector>

namespace qqc::text {

/// Lowercases, splits on whitespace and strips punctuation, keeping hyphens
/// and apostrophes that sit between two word characters. Throws
/// kInvalidArgument when nothing is left.
std::vector<std::string> tokenize(std::string_view question);

bool is_numeric_token(std::string_view token);

}  // namespace qqc::text

#endif  // QQC_TEXT_TOKENIZER_HPP
