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

#ifndef SARCASM_POLARITY_H_
#define SARCASM_POLARITY_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sarcasm/corpus.h"
#include "sarcasm/semigraph.h"

namespace sarcasm {

struct PolarityResult {
  std::string doc;
  double sarcastic_score = 0.0;
  double non_sarcastic_score = 0.0;
  // s / (s + n); empty when both scores are zero.
  std::optional<double> normalized;
  ClassLabel decision = ClassLabel::kNonSarcastic;
  std::uint64_t evidence_edges = 0;
  // No graphical edge reached the document (or it had no usable text).
  bool no_evidence = false;

  bool operator==(const PolarityResult&) const = default;
};

// Sum over the document's test vertices of
//   degree_c(v) * (sum of weights of v's edges into class-c vertices).
// Throws Error(kUnknownDocument) unless `doc` names test vertices in `g`.
double ClassScore(const Semigraph& g, std::string_view doc, ClassLabel label);

// Sarcastic iff the sarcastic score is strictly larger. The decision and the
// normalized polarity are evaluated on integer pattern counts over corpus
// totals divided by their greatest common divisor, so uniformly rescaled
// totals give bit-identical values.
PolarityResult ScoreDocument(const Semigraph& g, std::string_view doc);

// Input order is preserved. Unknown ids are collected and reported together
// in one Error(kUnknownDocument).
std::vector<PolarityResult> ScoreCorpus(const Semigraph& g,
                                        std::span<const std::string> docs);

// Result for a document that never reached the graph.
PolarityResult NoEvidenceResult(std::string doc);

// `doc<TAB>s<TAB>n<TAB>normalized<TAB>decision<TAB>edges`, scores with six
// significant digits, "NA" for an undefined normalized polarity.
std::string FormatResultLine(const PolarityResult& r);
// One JSON object, no trailing newline.
std::string FormatResultJson(const PolarityResult& r);

}  // namespace sarcasm

#endif  // SARCASM_POLARITY_H_
