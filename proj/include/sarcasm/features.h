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

// The seven pattern families and their class-conditional weights.
//
// For a document d of class c and a family k, the weight is
//
//   w(d, k, c) = sum over distinct patterns p of d in family k of
//                count_c(p) / total_k
//
// where count_c(p) is the number of occurrences of p across all training
// documents of class c and total_k is the number of family-k occurrences in
// the whole training corpus. Both counts keep multiplicity; only the outer
// sum runs over the deduplicated set.

#ifndef SARCASM_FEATURES_H_
#define SARCASM_FEATURES_H_

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sarcasm/corpus.h"
#include "sarcasm/tagger.h"

namespace sarcasm {

enum class FeatureKind : int {
  kBigram = 0,        // F1
  kTrigram = 1,       // F2
  kPosBigram = 2,     // F3
  kPosTrigram = 3,    // F4
  kIntensifier = 4,   // F5: ADV token followed by ADJ token
  kInterjection = 5,  // F6: token tagged INTJ
  kPunctuation = 6,   // F7: one pragmatic mark
};

inline constexpr int kNumFeatureKinds = 7;

inline constexpr std::array<FeatureKind, kNumFeatureKinds> kAllFeatureKinds = {
    FeatureKind::kBigram,       FeatureKind::kTrigram,
    FeatureKind::kPosBigram,    FeatureKind::kPosTrigram,
    FeatureKind::kIntensifier,  FeatureKind::kInterjection,
    FeatureKind::kPunctuation};

inline int Index(FeatureKind kind) { return static_cast<int>(kind); }

// "F1".."F7".
std::string FeatureKindCode(FeatureKind kind);
// "bigram", "pos-trigram", ...
const char* FeatureKindName(FeatureKind kind);
// Accepts "F1".."F7" (case-insensitive) or the long name.
FeatureKind ParseFeatureKind(std::string_view text);

// Tuple length of every pattern of the given family.
int PatternArity(FeatureKind kind);

// Which families take part in a run. Disabled families are not extracted,
// counted, or turned into vertices.
class FeatureMask {
 public:
  FeatureMask() { bits_.set(); }
  static FeatureMask All() { return FeatureMask(); }

  bool enabled(FeatureKind kind) const { return bits_.test(Index(kind)); }
  void set(FeatureKind kind, bool on) { bits_.set(Index(kind), on); }
  int count() const { return static_cast<int>(bits_.count()); }
  std::vector<FeatureKind> kinds() const;

  bool operator==(const FeatureMask&) const = default;

 private:
  std::bitset<kNumFeatureKinds> bits_;
};

struct Pattern {
  FeatureKind kind;
  std::vector<std::string> items;

  auto operator<=>(const Pattern&) const = default;
  bool operator==(const Pattern&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Pattern& p);

using PatternSet = std::set<Pattern>;

// Occurrence multiset of one document, per family.
using PatternCounts = std::array<std::map<Pattern, std::uint64_t>, kNumFeatureKinds>;

// Deduplicated pattern sets of one document, per family.
using DocumentPatterns = std::array<PatternSet, kNumFeatureKinds>;

PatternCounts CountPatterns(const TaggedDocument& doc,
                            const FeatureMask& mask = FeatureMask::All());

DocumentPatterns ExtractPatterns(const TaggedDocument& doc,
                                 const FeatureMask& mask = FeatureMask::All());

struct CorpusTotals {
  std::array<std::uint64_t, kNumFeatureKinds> total{};

  std::uint64_t operator[](FeatureKind kind) const {
    return total[Index(kind)];
  }
  std::uint64_t& operator[](FeatureKind kind) { return total[Index(kind)]; }

  bool operator==(const CorpusTotals&) const = default;
};

// Per class, per family: pattern -> occurrence count within that class.
class ClassCounts {
 public:
  using Table = std::map<Pattern, std::uint64_t>;

  const Table& table(FeatureKind kind, ClassLabel label) const {
    return tables_[Slot(label)][Index(kind)];
  }
  Table& table(FeatureKind kind, ClassLabel label) {
    return tables_[Slot(label)][Index(kind)];
  }

  // 0 when the pattern never occurred in the class.
  std::uint64_t count(const Pattern& p, ClassLabel label) const;

  void Add(const PatternCounts& doc_counts, ClassLabel label);

  bool operator==(const ClassCounts&) const = default;

 private:
  static int Slot(ClassLabel label) {
    return label == ClassLabel::kSarcastic ? 0 : 1;
  }
  std::array<std::array<Table, kNumFeatureKinds>, 2> tables_;
};

struct LabeledDocument {
  TaggedDocument doc;
  ClassLabel label;
};

CorpusTotals ComputeTotals(std::span<const LabeledDocument> train,
                           const FeatureMask& mask = FeatureMask::All());
void AddToTotals(CorpusTotals& totals, const PatternCounts& doc_counts);

ClassCounts ComputeClassCounts(std::span<const LabeledDocument> train,
                               const FeatureMask& mask = FeatureMask::All());

struct FeatureWeight {
  FeatureKind kind;
  std::string doc;
  ClassLabel label;
  double weight = 0.0;
  // True when total_k is zero and the weight defaulted to 0.
  bool degenerate = false;
  // Sum of the class counts, before division by total_k.
  std::uint64_t numerator = 0;
};

// `patterns` must all be of `kind`. The count numerators are summed as
// integers before the single division, so a document that makes up the
// whole corpus gets exactly 1.0.
FeatureWeight ComputeFeatureWeight(std::string_view doc_id, FeatureKind kind,
                                   const PatternSet& patterns, ClassLabel label,
                                   const ClassCounts& counts,
                                   const CorpusTotals& totals);

// Debug dump: `doc_id<TAB>kind<TAB>class<TAB>weight` per line.
void WriteWeightDump(std::ostream& os, std::span<const FeatureWeight> weights);

}  // namespace sarcasm

#endif  // SARCASM_FEATURES_H_
