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

#include "text/resources.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "common/error.hpp"

#ifndef QQC_DEFAULT_RESOURCE_DIR
#define QQC_DEFAULT_RESOURCE_DIR "resources"
#endif

namespace qqc::text {

namespace {

constexpr std::string_view kModule = "question-features";

std::ifstream open(const std::filesystem::path& p) {
  std::ifstream in(p);
  require(static_cast<bool>(in), ErrorCode::kIo, kModule, "cannot open resource " + p.string());
  return in;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return "NOUN";
    case Pos::kVerb: return "VERB";
    case Pos::kAdj: return "ADJ";
    case Pos::kAdv: return "ADV";
    case Pos::kOther: return "OTHER";
  }
  return "OTHER";
}

std::optional<Pos> parse_pos(std::string_view name) {
  for (Pos p : {Pos::kNoun, Pos::kVerb, Pos::kAdj, Pos::kAdv, Pos::kOther})
    if (pos_name(p) == name) return p;
  return std::nullopt;
}

const std::vector<Pos>* TextResources::tags(const std::string& w) const {
  const auto it = lexicon.find(w);
  return it == lexicon.end() ? nullptr : &it->second;
}

bool TextResources::has_tag(const std::string& w, Pos pos) const {
  const auto* t = tags(w);
  return t && std::find(t->begin(), t->end(), pos) != t->end();
}

std::filesystem::path default_resource_dir() {
  if (const char* env = std::getenv("QQC_RESOURCE_DIR"); env && *env) return env;
  return QQC_DEFAULT_RESOURCE_DIR;
}

TextResources load_resources(const std::filesystem::path& dir) {
  TextResources res;
  std::string line;

  auto in = open(dir / "stopwords.txt");
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') res.stopwords.insert(line);
  }

  auto lex = open(dir / "lexicon.tsv");
  for (std::size_t no = 1; std::getline(lex, line); ++no) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    require(tab != std::string::npos, ErrorCode::kParse, kModule,
            "lexicon.tsv line " + std::to_string(no) + ": expected word<TAB>tag");
    const auto pos = parse_pos(trim(line.substr(tab + 1)));
    require(pos.has_value(), ErrorCode::kParse, kModule,
            "lexicon.tsv line " + std::to_string(no) + ": unknown tag");
    auto& tags = res.lexicon[line.substr(0, tab)];
    if (std::find(tags.begin(), tags.end(), *pos) == tags.end()) tags.push_back(*pos);
  }

  auto irr = open(dir / "irregular_lemmas.tsv");
  for (std::size_t no = 1; std::getline(irr, line); ++no) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    require(tab != std::string::npos, ErrorCode::kParse, kModule,
            "irregular_lemmas.tsv line " + std::to_string(no) + ": expected surface<TAB>lemma");
    res.irregular.emplace(line.substr(0, tab), trim(line.substr(tab + 1)));
  }
  return res;
}

}  // namespace qqc::text
