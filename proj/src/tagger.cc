// Copyright 2026 The Semigraph Sarcasm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sarcasm/tagger.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "sarcasm/error.h"

namespace sarcasm {
namespace internal {
extern const std::string_view kBuiltinLexicon;
extern const std::string_view kBuiltinSuffixRules;
}  // namespace internal

namespace {

constexpr std::array<std::pair<PosTag, const char*>, 17> kTagNames = {{
    {PosTag::kAdj, "ADJ"},     {PosTag::kAdp, "ADP"},
    {PosTag::kAdv, "ADV"},     {PosTag::kAux, "AUX"},
    {PosTag::kCconj, "CCONJ"}, {PosTag::kDet, "DET"},
    {PosTag::kIntj, "INTJ"},   {PosTag::kNoun, "NOUN"},
    {PosTag::kNum, "NUM"},     {PosTag::kPart, "PART"},
    {PosTag::kPron, "PRON"},   {PosTag::kPropn, "PROPN"},
    {PosTag::kPunct, "PUNCT"}, {PosTag::kSconj, "SCONJ"},
    {PosTag::kSym, "SYM"},     {PosTag::kVerb, "VERB"},
    {PosTag::kX, "X"},
}};

std::string LowerAscii(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Shared reader for the two-column resource files.
template <typename Fn>
void ReadTwoColumns(std::istream& in, const char* what, Fn&& fn) {
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw Error(ErrorCode::kParse, std::string(what) + " line " +
                                         std::to_string(lineno) +
                                         ": expected <entry><TAB><TAG>");
    }
    PosTag tag;
    try {
      tag = ParsePosTag(line.substr(tab + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, std::string(what) + " line " +
                                         std::to_string(lineno) + ": " + e.what());
    }
    fn(LowerAscii(line.substr(0, tab)), tag);
  }
}

bool AllDigits(std::string_view w) {
  return !w.empty() &&
         std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

const char* PosTagName(PosTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "X";
}

PosTag ParsePosTag(std::string_view name) {
  for (const auto& [t, n] : kTagNames) {
    if (name == n) return t;
  }
  throw Error(ErrorCode::kParse, "unknown POS tag '" + std::string(name) + "'");
}

LexiconTagger::LexiconTagger(
    std::unordered_map<std::string, PosTag> lexicon,
    std::vector<std::pair<std::string, PosTag>> suffix_rules,
    std::string description)
    : lexicon_(std::move(lexicon)),
      suffix_rules_(std::move(suffix_rules)),
      description_(std::move(description)) {
  std::stable_sort(suffix_rules_.begin(), suffix_rules_.end(),
                   [](const auto& a, const auto& b) {
                     return a.first.size() > b.first.size();
                   });
}

PosTag LexiconTagger::TagWord(std::string_view word) const {
  if (auto it = lexicon_.find(std::string(word)); it != lexicon_.end()) {
    return it->second;
  }
  if (AllDigits(word)) return PosTag::kNum;
  for (const auto& [suffix, tag] : suffix_rules_) {
    // Leave at least two characters of stem.
    if (word.size() >= suffix.size() + 2 && word.ends_with(suffix)) return tag;
  }
  return PosTag::kNoun;
}

TaggedDocument LexiconTagger::Tag(const TokenizedDocument& doc) const {
  TaggedDocument out;
  out.id = doc.id;
  out.tagged.reserve(doc.tokens.size());
  for (const auto& token : doc.tokens) {
    out.tagged.emplace_back(token, TagWord(token));
  }
  out.punct_tokens = doc.punct_tokens;
  return out;
}

std::unordered_map<std::string, PosTag> ParseLexicon(std::istream& in) {
  std::unordered_map<std::string, PosTag> lexicon;
  ReadTwoColumns(in, "lexicon", [&](std::string word, PosTag tag) {
    lexicon.insert_or_assign(std::move(word), tag);
  });
  return lexicon;
}

std::vector<std::pair<std::string, PosTag>> ParseSuffixRules(std::istream& in) {
  std::vector<std::pair<std::string, PosTag>> rules;
  ReadTwoColumns(in, "suffix rules", [&](std::string suffix, PosTag tag) {
    rules.emplace_back(std::move(suffix), tag);
  });
  return rules;
}

std::unique_ptr<LexiconTagger> LoadTagger(std::string_view spec,
                                          const std::string& suffix_path) {
  if (spec == kBuiltinTagger) {
    std::istringstream lex{std::string(internal::kBuiltinLexicon)};
    std::istringstream suf{std::string(internal::kBuiltinSuffixRules)};
    return std::make_unique<LexiconTagger>(ParseLexicon(lex), ParseSuffixRules(suf),
                                           std::string(kBuiltinTagger));
  }
  const std::string path(spec);
  std::ifstream lex(path);
  if (!lex) throw Error(ErrorCode::kIo, "cannot open lexicon '" + path + "'");
  auto lexicon = ParseLexicon(lex);
  std::vector<std::pair<std::string, PosTag>> rules;
  if (!suffix_path.empty()) {
    std::ifstream suf(suffix_path);
    if (!suf) {
      throw Error(ErrorCode::kIo, "cannot open suffix rules '" + suffix_path + "'");
    }
    rules = ParseSuffixRules(suf);
  }
  return std::make_unique<LexiconTagger>(std::move(lexicon), std::move(rules), path);
}

}  // namespace sarcasm
