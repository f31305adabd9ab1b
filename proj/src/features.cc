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

#include "sarcasm/features.h"

#include <cstdio>

#include "sarcasm/error.h"

namespace sarcasm {
namespace {

constexpr const char* kKindNames[kNumFeatureKinds] = {
    "bigram",       "trigram",      "pos-bigram", "pos-trigram",
    "intensifier",  "interjection", "punctuation"};

void AddNgrams(std::map<Pattern, std::uint64_t>& out, FeatureKind kind,
               const std::vector<std::string>& seq, size_t n) {
  if (seq.size() < n) return;
  for (size_t i = 0; i + n <= seq.size(); ++i) {
    Pattern p{kind, std::vector<std::string>(seq.begin() + i, seq.begin() + i + n)};
    ++out[std::move(p)];
  }
}

}  // namespace

std::string FeatureKindCode(FeatureKind kind) {
  return "F" + std::to_string(Index(kind) + 1);
}

const char* FeatureKindName(FeatureKind kind) { return kKindNames[Index(kind)]; }

FeatureKind ParseFeatureKind(std::string_view text) {
  if (text.size() == 2 && (text[0] == 'F' || text[0] == 'f') && text[1] >= '1' &&
      text[1] <= '7') {
    return static_cast<FeatureKind>(text[1] - '1');
  }
  for (int i = 0; i < kNumFeatureKinds; ++i) {
    if (text == kKindNames[i]) return static_cast<FeatureKind>(i);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown feature kind '" + std::string(text) + "'");
}

int PatternArity(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kBigram:
    case FeatureKind::kPosBigram:
    case FeatureKind::kIntensifier:
      return 2;
    case FeatureKind::kTrigram:
    case FeatureKind::kPosTrigram:
      return 3;
    case FeatureKind::kInterjection:
    case FeatureKind::kPunctuation:
      return 1;
  }
  return 0;
}

std::vector<FeatureKind> FeatureMask::kinds() const {
  std::vector<FeatureKind> out;
  for (FeatureKind k : kAllFeatureKinds) {
    if (enabled(k)) out.push_back(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Pattern& p) {
  os << FeatureKindCode(p.kind) << "(";
  for (size_t i = 0; i < p.items.size(); ++i) {
    if (i) os << ",";
    os << p.items[i];
  }
  return os << ")";
}

PatternCounts CountPatterns(const TaggedDocument& doc, const FeatureMask& mask) {
  std::vector<std::string> words;
  std::vector<std::string> tags;
  words.reserve(doc.tagged.size());
  tags.reserve(doc.tagged.size());
  for (const auto& [word, tag] : doc.tagged) {
    words.push_back(word);
    tags.emplace_back(PosTagName(tag));
  }

  PatternCounts counts;
  auto slot = [&](FeatureKind k) -> std::map<Pattern, std::uint64_t>& {
    return counts[Index(k)];
  };
  if (mask.enabled(FeatureKind::kBigram)) {
    AddNgrams(slot(FeatureKind::kBigram), FeatureKind::kBigram, words, 2);
  }
  if (mask.enabled(FeatureKind::kTrigram)) {
    AddNgrams(slot(FeatureKind::kTrigram), FeatureKind::kTrigram, words, 3);
  }
  if (mask.enabled(FeatureKind::kPosBigram)) {
    AddNgrams(slot(FeatureKind::kPosBigram), FeatureKind::kPosBigram, tags, 2);
  }
  if (mask.enabled(FeatureKind::kPosTrigram)) {
    AddNgrams(slot(FeatureKind::kPosTrigram), FeatureKind::kPosTrigram, tags, 3);
  }
  if (mask.enabled(FeatureKind::kIntensifier)) {
    for (size_t i = 0; i + 1 < doc.tagged.size(); ++i) {
      if (doc.tagged[i].second == PosTag::kAdv &&
          doc.tagged[i + 1].second == PosTag::kAdj) {
        ++slot(FeatureKind::kIntensifier)[Pattern{
            FeatureKind::kIntensifier, {words[i], words[i + 1]}}];
      }
    }
  }
  if (mask.enabled(FeatureKind::kInterjection)) {
    for (const auto& [word, tag] : doc.tagged) {
      if (tag == PosTag::kIntj) {
        ++slot(FeatureKind::kInterjection)[Pattern{FeatureKind::kInterjection, {word}}];
      }
    }
  }
  if (mask.enabled(FeatureKind::kPunctuation)) {
    for (const auto& mark : doc.punct_tokens) {
      ++slot(FeatureKind::kPunctuation)[Pattern{FeatureKind::kPunctuation, {mark}}];
    }
  }
  return counts;
}

DocumentPatterns ExtractPatterns(const TaggedDocument& doc, const FeatureMask& mask) {
  const PatternCounts counts = CountPatterns(doc, mask);
  DocumentPatterns sets;
  for (int k = 0; k < kNumFeatureKinds; ++k) {
    for (const auto& [pattern, n] : counts[k]) sets[k].insert(sets[k].end(), pattern);
  }
  return sets;
}

std::uint64_t ClassCounts::count(const Pattern& p, ClassLabel label) const {
  const Table& t = table(p.kind, label);
  auto it = t.find(p);
  return it == t.end() ? 0 : it->second;
}

void ClassCounts::Add(const PatternCounts& doc_counts, ClassLabel label) {
  for (int k = 0; k < kNumFeatureKinds; ++k) {
    Table& t = tables_[Slot(label)][k];
    for (const auto& [pattern, n] : doc_counts[k]) t[pattern] += n;
  }
}

void AddToTotals(CorpusTotals& totals, const PatternCounts& doc_counts) {
  for (int k = 0; k < kNumFeatureKinds; ++k) {
    for (const auto& [pattern, n] : doc_counts[k]) totals.total[k] += n;
  }
}

CorpusTotals ComputeTotals(std::span<const LabeledDocument> train,
                           const FeatureMask& mask) {
  CorpusTotals totals;
  for (const auto& d : train) AddToTotals(totals, CountPatterns(d.doc, mask));
  return totals;
}

ClassCounts ComputeClassCounts(std::span<const LabeledDocument> train,
                               const FeatureMask& mask) {
  ClassCounts counts;
  for (const auto& d : train) counts.Add(CountPatterns(d.doc, mask), d.label);
  return counts;
}

FeatureWeight ComputeFeatureWeight(std::string_view doc_id, FeatureKind kind,
                                   const PatternSet& patterns, ClassLabel label,
                                   const ClassCounts& counts,
                                   const CorpusTotals& totals) {
  FeatureWeight w{kind, std::string(doc_id), label, 0.0, false};
  const std::uint64_t total = totals[kind];
  if (total == 0) {
    w.degenerate = true;
    return w;
  }
  const ClassCounts::Table& table = counts.table(kind, label);
  std::uint64_t numerator = 0;
  for (const Pattern& p : patterns) {
    if (p.kind != kind) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pattern of kind " + FeatureKindCode(p.kind) +
                      " in a " + FeatureKindCode(kind) + " set");
    }
    if (auto it = table.find(p); it != table.end()) numerator += it->second;
  }
  w.numerator = numerator;
  w.weight = static_cast<double>(numerator) / static_cast<double>(total);
  return w;
}

void WriteWeightDump(std::ostream& os, std::span<const FeatureWeight> weights) {
  char buf[64];
  for (const auto& w : weights) {
    std::snprintf(buf, sizeof(buf), "%.10g", w.weight);
    os << w.doc << '\t' << FeatureKindCode(w.kind) << '\t'
       << ClassLabelName(w.label) << '\t' << buf << '\n';
  }
}

}  // namespace sarcasm
