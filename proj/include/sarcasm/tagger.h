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

#ifndef SARCASM_TAGGER_H_
#define SARCASM_TAGGER_H_

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sarcasm/corpus.h"

namespace sarcasm {

// Universal POS tags.
enum class PosTag {
  kAdj,
  kAdp,
  kAdv,
  kAux,
  kCconj,
  kDet,
  kIntj,
  kNoun,
  kNum,
  kPart,
  kPron,
  kPropn,
  kPunct,
  kSconj,
  kSym,
  kVerb,
  kX,
};

const char* PosTagName(PosTag tag);  // "ADJ", "INTJ", ...
// Throws Error(kParse) for names outside the tag set.
PosTag ParsePosTag(std::string_view name);

struct TaggedDocument {
  std::string id;
  std::vector<std::pair<std::string, PosTag>> tagged;
  // Carried through from the tokenized document for the pragmatic feature.
  std::vector<std::string> punct_tokens;
};

class Tagger {
 public:
  virtual ~Tagger() = default;

  // Total and deterministic: every word token gets exactly one tag.
  virtual TaggedDocument Tag(const TokenizedDocument& doc) const = 0;

  // Identifies the model in saved files ("builtin" or a path).
  virtual std::string Describe() const = 0;
};

// Lexicon lookup, then an all-digit check (NUM), then longest matching
// suffix rule, then NOUN.
class LexiconTagger : public Tagger {
 public:
  LexiconTagger(std::unordered_map<std::string, PosTag> lexicon,
                std::vector<std::pair<std::string, PosTag>> suffix_rules,
                std::string description);

  TaggedDocument Tag(const TokenizedDocument& doc) const override;
  std::string Describe() const override { return description_; }

  PosTag TagWord(std::string_view word) const;
  size_t lexicon_size() const { return lexicon_.size(); }
  size_t suffix_rule_count() const { return suffix_rules_.size(); }

 private:
  std::unordered_map<std::string, PosTag> lexicon_;
  // Sorted longest suffix first.
  std::vector<std::pair<std::string, PosTag>> suffix_rules_;
  std::string description_;
};

// `word<TAB>TAG` per line; `#` starts a comment line. Parse errors name the
// line. Words are lowercased on load.
std::unordered_map<std::string, PosTag> ParseLexicon(std::istream& in);
// `suffix<TAB>TAG` per line, same comment syntax.
std::vector<std::pair<std::string, PosTag>> ParseSuffixRules(std::istream& in);

inline constexpr std::string_view kBuiltinTagger = "builtin";

// `spec` is "builtin" or a lexicon file path. `suffix_path`, when non-empty,
// supplies suffix rules for a lexicon file (the builtin model always carries
// its own).
std::unique_ptr<LexiconTagger> LoadTagger(std::string_view spec,
                                          const std::string& suffix_path = {});

}  // namespace sarcasm

#endif  // SARCASM_TAGGER_H_
