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

// Versioned JSON model files.
//
// Top-level keys: version, config, totals, class_counts, vertices, semiedges,
// graphical_edges. Weights are written as shortest round-trip decimal strings
// so that save -> load -> save is byte-identical.

#ifndef SARCASM_MODEL_IO_H_
#define SARCASM_MODEL_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "sarcasm/semigraph.h"

namespace sarcasm {

inline constexpr int kModelFormatVersion = 1;

struct Model {
  Semigraph graph;
  std::string tagger = "builtin";
  std::string tagger_suffixes;  // empty unless a custom suffix file was used

  bool operator==(const Model&) const = default;
};

std::string SerializeModel(const Model& model);
// Throws Error(kParse) for malformed content and Error(kUnsupportedVersion)
// for files written by a newer format version.
Model DeserializeModel(const std::string& text);

void SaveModel(const Model& model, const std::string& path);
Model LoadModel(const std::string& path);

// Decimal text that parses back to exactly `value`.
std::string FormatExactDouble(double value);
double ParseExactDouble(const std::string& text);

}  // namespace sarcasm

#endif  // SARCASM_MODEL_IO_H_
