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

// Review corpora: loading, text normalization and tokenization, and
// stratified train/test splitting.

#ifndef SARCASM_CORPUS_H_
#define SARCASM_CORPUS_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sarcasm {

enum class ClassLabel { kSarcastic, kNonSarcastic };

inline constexpr ClassLabel kAllClasses[] = {ClassLabel::kSarcastic,
                                             ClassLabel::kNonSarcastic};

// "sarcastic" / "non-sarcastic".
const char* ClassLabelName(ClassLabel label);
ClassLabel ParseClassLabel(std::string_view name);
ClassLabel OtherClass(ClassLabel label);

struct Document {
  std::string id;
  std::string text;
  std::optional<ClassLabel> label;
  std::optional<int> rating;  // stars, 1..5

  bool operator==(const Document&) const = default;
};

// The pragmatic punctuation set kept through preprocessing.
inline constexpr std::string_view kPragmaticMarks = "!\"'?.";

struct TokenizedDocument {
  std::string id;
  std::vector<std::string> tokens;        // lowercased word tokens
  std::vector<std::string> punct_tokens;  // each one of kPragmaticMarks
};

enum class CorpusFormat {
  kAuto,
  kTsv,   // label<TAB>rating<TAB>title<TAB>body
  kJson,  // one JSON object per line
};

CorpusFormat ParseCorpusFormat(std::string_view name);

struct LoadOptions {
  CorpusFormat format = CorpusFormat::kAuto;
  // Prefix for generated document ids ("<prefix>:<line>"). Defaults to the
  // file stem when loading from a path.
  std::string id_prefix;
  // JSON records: read `resolved_text` (coreference-resolved upstream)
  // instead of `text` when the key is present.
  bool use_resolved_text = false;
  // When set, malformed records are described here and skipped instead of
  // aborting the load.
  std::vector<std::string>* record_errors = nullptr;
};

// Parses a corpus stream. Blank lines are skipped. Throws Error(kParse) with
// the line number for malformed records and Error(kUnknownLabel) for labels
// other than ironic/regular.
std::vector<Document> ParseCorpus(std::istream& in, const LoadOptions& options);

std::vector<Document> LoadCorpus(const std::string& path,
                                 LoadOptions options = {});

// Strips special symbols, lowercases, and separates word tokens from
// pragmatic punctuation marks. Throws Error(kEmptyAfterPreprocess) when no
// word token survives.
TokenizedDocument Preprocess(const Document& doc);

struct Split {
  std::vector<Document> train;
  std::vector<Document> test;
};

// Stratified random split. Each class contributes round(n_c * test_fraction)
// documents to the test side, capped so that every class keeps at least one
// training document. Both sides preserve corpus order. The shuffle is a
// Fisher-Yates pass over mt19937_64 output, so partitions are identical
// across platforms for a given seed.
Split StratifiedSplit(std::span<const Document> docs, double test_fraction,
                      std::uint64_t seed);

}  // namespace sarcasm

#endif  // SARCASM_CORPUS_H_
