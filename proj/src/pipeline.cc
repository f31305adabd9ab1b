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

#include "sarcasm/pipeline.h"

#include <map>

#include "sarcasm/error.h"
#include "sarcasm/semigraph.h"

namespace sarcasm {
namespace {

// Test documents enter the scoring graph under ids no corpus produces.
constexpr std::string_view kTestIdPrefix = "\x1ftest:";

}  // namespace

PreparedTraining PrepareTraining(std::span<const Document> docs, const Tagger& tagger) {
  PreparedTraining out;
  for (const auto& doc : docs) {
    if (!doc.label) {
      throw Error(ErrorCode::kInvalidArgument,
                  "training document '" + doc.id + "' has no label");
    }
    try {
      out.docs.push_back(LabeledDocument{tagger.Tag(Preprocess(doc)), *doc.label});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyAfterPreprocess) throw;
      out.rejected.push_back(doc.id);
    }
  }
  return out;
}

Model TrainModel(std::span<const Document> docs, const RunConfig& config,
                 const Tagger& tagger, std::vector<std::string>* rejected) {
  if (config.features.count() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "at least one feature family must be enabled");
  }
  PreparedTraining prepared = PrepareTraining(docs, tagger);
  if (rejected) *rejected = prepared.rejected;
  Model model;
  model.graph = BuildTrainGraph(prepared.docs, config.features);
  model.tagger = config.tagger;
  model.tagger_suffixes = config.tagger_suffixes;
  return model;
}

void AddToModel(Model& model, std::span<const Document> docs, const Tagger& tagger,
                std::vector<std::string>* rejected) {
  PreparedTraining prepared = PrepareTraining(docs, tagger);
  if (rejected) *rejected = prepared.rejected;
  InsertTrainingDocuments(model.graph, prepared.docs);
}

std::vector<PolarityResult> ClassifyDocuments(const Model& model,
                                              std::span<const Document> docs,
                                              const Tagger& tagger) {
  std::vector<TaggedDocument> tagged;
  std::vector<std::optional<std::string>> internal_ids(docs.size());
  for (size_t i = 0; i < docs.size(); ++i) {
    Document copy = docs[i];
    copy.id = std::string(kTestIdPrefix) + std::to_string(i);
    try {
      tagged.push_back(tagger.Tag(Preprocess(copy)));
      internal_ids[i] = copy.id;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyAfterPreprocess) throw;
    }
  }

  const Semigraph scoring = AttachTestDocuments(model.graph, tagged);
  std::vector<PolarityResult> results;
  results.reserve(docs.size());
  for (size_t i = 0; i < docs.size(); ++i) {
    if (!internal_ids[i]) {
      results.push_back(NoEvidenceResult(docs[i].id));
      continue;
    }
    PolarityResult r = ScoreDocument(scoring, *internal_ids[i]);
    r.doc = docs[i].id;
    results.push_back(std::move(r));
  }
  return results;
}

EvaluationRun EvaluateRun(std::span<const Document> train,
                          std::span<const Document> test, const RunConfig& config,
                          const Tagger& tagger) {
  EvaluationRun run;
  const Model model = TrainModel(train, config, tagger, &run.rejected);
  run.train_documents = model.graph.Documents().size();

  std::map<std::string, ClassLabel> gold;
  for (const auto& doc : test) {
    if (!doc.label) {
      throw Error(ErrorCode::kMissingGold, "test document '" + doc.id + "' has no label");
    }
    gold[doc.id] = *doc.label;
  }
  run.results = ClassifyDocuments(model, test, tagger);
  run.test_documents = run.results.size();
  run.report = Metrics(Confusion(run.results, gold));
  return run;
}

}  // namespace sarcasm
