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


// Shared test fixtures: three small labelled corpora with held-out
// documents, a synthetic corpus generator, and file helpers.

#ifndef SARCASM_TESTS_FIXTURES_H_
#define SARCASM_TESTS_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "oracle.h"
#include "sarcasm/corpus.h"
#include "sarcasm/features.h"
#include "sarcasm/semigraph.h"
#include "sarcasm/tagger.h"

namespace sarcasm_test {

struct Fixture {
  std::string name;
  std::vector<sarcasm::Document> train;  // labelled
  std::vector<sarcasm::Document> test;   // labelled, held out
};

// Three corpora of at most ten documents and twenty tokens each.
const std::vector<Fixture>& ToyFixtures();

const sarcasm::LexiconTagger& Builtin();

sarcasm::TaggedDocument TagText(const std::string& id, const std::string& text);
sarcasm::TaggedDocument TagDocument(const sarcasm::Document& doc);
std::vector<sarcasm::LabeledDocument> TagLabeled(
    const std::vector<sarcasm::Document>& docs);
std::vector<sarcasm::TaggedDocument> TagUnlabeled(
    const std::vector<sarcasm::Document>& docs);

// Fixture pieces in the oracle's representation.
Oracle MakeOracle(const Fixture& f);

// Training graph over the fixture's train side with its test side attached.
sarcasm::Semigraph BuildFixtureGraph(const Fixture& f);

// Random labelled reviews over a small vocabulary with frequent
// intensifiers, interjections and pragmatic marks.
std::vector<sarcasm::Document> SyntheticCorpus(size_t n, std::uint64_t seed);

// Directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string Path(const std::string& name) const;

 private:
  std::filesystem::path root_;
};

void WriteFile(const std::string& path, const std::string& content);
std::string ReadFile(const std::string& path);

// One TSV corpus line per document.
std::string ToTsv(const std::vector<sarcasm::Document>& docs);

}  // namespace sarcasm_test

#endif  // SARCASM_TESTS_FIXTURES_H_
