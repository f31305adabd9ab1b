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

// End-to-end wiring: documents -> tokens -> tags -> graph -> scores ->
// metrics.

#ifndef SARCASM_PIPELINE_H_
#define SARCASM_PIPELINE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sarcasm/corpus.h"
#include "sarcasm/eval.h"
#include "sarcasm/features.h"
#include "sarcasm/model_io.h"
#include "sarcasm/polarity.h"
#include "sarcasm/tagger.h"

namespace sarcasm {

struct RunConfig {
  FeatureMask features;
  double test_fraction = 0.2;
  std::uint64_t seed = 42;
  std::string tagger = "builtin";
  std::string tagger_suffixes;
};

struct PreparedTraining {
  std::vector<LabeledDocument> docs;
  // Ids of documents dropped because nothing survived preprocessing.
  std::vector<std::string> rejected;
};

// Throws Error(kInvalidArgument) for unlabeled documents.
PreparedTraining PrepareTraining(std::span<const Document> docs,
                                 const Tagger& tagger);

Model TrainModel(std::span<const Document> docs, const RunConfig& config,
                 const Tagger& tagger,
                 std::vector<std::string>* rejected = nullptr);

// Incremental insertion of labeled documents into a trained model.
void AddToModel(Model& model, std::span<const Document> docs,
                const Tagger& tagger,
                std::vector<std::string>* rejected = nullptr);

// Scores documents against a frozen model. Test vertices live in a private
// copy of the graph under internal ids, so inputs may reuse training ids.
// Documents with no usable text come back NonSarcastic with no_evidence set.
std::vector<PolarityResult> ClassifyDocuments(const Model& model,
                                              std::span<const Document> docs,
                                              const Tagger& tagger);

struct EvaluationRun {
  MetricsReport report;
  std::vector<PolarityResult> results;
  size_t train_documents = 0;
  size_t test_documents = 0;
  std::vector<std::string> rejected;
};

// Trains on `train`, classifies `test`, and tallies against the test labels.
EvaluationRun EvaluateRun(std::span<const Document> train,
                          std::span<const Document> test,
                          const RunConfig& config, const Tagger& tagger);

}  // namespace sarcasm

#endif  // SARCASM_PIPELINE_H_
