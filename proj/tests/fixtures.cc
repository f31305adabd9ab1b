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


#include "fixtures.h"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sarcasm_test {

using sarcasm::ClassLabel;
using sarcasm::Document;

namespace {

Document Doc(const std::string& id, const std::string& text, ClassLabel label) {
  Document d;
  d.id = id;
  d.text = text;
  d.label = label;
  return d;
}

constexpr ClassLabel S = ClassLabel::kSarcastic;
constexpr ClassLabel N = ClassLabel::kNonSarcastic;

}  // namespace

const std::vector<Fixture>& ToyFixtures() {
  static const std::vector<Fixture> fixtures = {
      {"gadgets",
       {Doc("g1", "Oh great, another phone that dies in an hour!!!", S),
        Doc("g2", "Wow, really great quality... it broke in a day!", S),
        Doc("g3", "Oh sure, the \"best\" charger ever. Really amazing?", S),
        Doc("g4", "The charger works well and the cable is very sturdy.", N),
        Doc("g5", "Good phone, great battery, fast shipping.", N),
        Doc("g6", "The case fits well and looks very nice.", N)},
       {Doc("gt1", "Oh wow, really great battery!!!", S),
        Doc("gt2", "The cable works well.", N),
        Doc("gt3", "Sturdy case, fast charger.", N)}},
      {"repeats",
       {Doc("r1", "very good very good very good!", S),
        Doc("r2", "oh oh well, very good? very good!", S),
        Doc("r3", "good good good.", N),
        Doc("r4", "it is good and it is fine.", N)},
       {Doc("rt1", "very good good", S), Doc("rt2", "oh well?!", S),
        Doc("rt3", "it is fine", N)}},
      {"tiny",
       {Doc("t1", "wow!", S), Doc("t2", "fine.", N),
        Doc("t3", "oh no, really bad?!", S), Doc("t4", "really bad service", N),
        Doc("t5", "the service was fine", N)},
       {Doc("tt1", "really bad!", S), Doc("tt2", "wow", S),
        Doc("tt3", "nothing", N)}},
  };
  return fixtures;
}

const sarcasm::LexiconTagger& Builtin() {
  static const auto tagger = sarcasm::LoadTagger(sarcasm::kBuiltinTagger);
  return *tagger;
}

sarcasm::TaggedDocument TagDocument(const Document& doc) {
  return Builtin().Tag(sarcasm::Preprocess(doc));
}

sarcasm::TaggedDocument TagText(const std::string& id,
                                const std::string& text) {
  Document d;
  d.id = id;
  d.text = text;
  return TagDocument(d);
}

std::vector<sarcasm::LabeledDocument> TagLabeled(
    const std::vector<Document>& docs) {
  std::vector<sarcasm::LabeledDocument> out;
  for (const Document& d : docs) out.push_back({TagDocument(d), *d.label});
  return out;
}

std::vector<sarcasm::TaggedDocument> TagUnlabeled(
    const std::vector<Document>& docs) {
  std::vector<sarcasm::TaggedDocument> out;
  for (const Document& d : docs) out.push_back(TagDocument(d));
  return out;
}

Oracle MakeOracle(const Fixture& f) {
  std::vector<OracleDoc> train;
  for (const auto& l : TagLabeled(f.train)) {
    train.push_back(ToOracleDoc(l.doc, l.label == S ? 0 : 1));
  }
  std::vector<OracleDoc> tests;
  for (const auto& t : TagUnlabeled(f.test)) tests.push_back(ToOracleDoc(t, -1));
  return Oracle(std::move(train), std::move(tests));
}

sarcasm::Semigraph BuildFixtureGraph(const Fixture& f) {
  const auto train = TagLabeled(f.train);
  const auto tests = TagUnlabeled(f.test);
  return sarcasm::AttachTestDocuments(sarcasm::BuildTrainGraph(train), tests);
}

std::vector<Document> SyntheticCorpus(size_t n, std::uint64_t seed) {
  static const std::vector<std::string> kWords = {
      "the",     "phone",  "battery", "case",   "cable",  "charger",
      "works",   "broke",  "fits",    "is",     "was",    "and",
      "great",   "good",   "bad",     "nice",   "sturdy", "amazing",
      "very",    "really", "so",      "quite",  "oh",     "wow",
      "shipping", "quality", "day",   "hour",   "ever",   "best"};
  static const std::vector<std::string> kMarks = {"!", "?", ".", "\"", "'"};
  std::mt19937_64 rng(seed);
  auto pick = [&rng](size_t bound) {
    return std::uniform_int_distribution<size_t>(0, bound - 1)(rng);
  };
  std::vector<Document> docs;
  for (size_t i = 0; i < n; ++i) {
    std::string text;
    const size_t len = 3 + pick(10);
    for (size_t w = 0; w < len; ++w) {
      if (!text.empty()) text += ' ';
      text += kWords[pick(kWords.size())];
      if (pick(5) == 0) text += kMarks[pick(kMarks.size())];
    }
    docs.push_back(Doc("syn" + std::to_string(i), text, pick(3) == 0 ? S : N));
  }
  return docs;
}

TempDir::TempDir() {
  std::random_device rd;
  const auto base = std::filesystem::temp_directory_path();
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto candidate = base / ("sarcasm_test_" + std::to_string(rd()));
    if (std::filesystem::create_directory(candidate)) {
      root_ = candidate;
      return;
    }
  }
  throw std::runtime_error("cannot create temporary directory");
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(root_, ec);
}

std::string TempDir::Path(const std::string& name) const {
  return (root_ / name).string();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string ToTsv(const std::vector<Document>& docs) {
  std::string out;
  for (const Document& d : docs) {
    out += d.label ? (*d.label == S ? "ironic" : "regular") : "-";
    out += "\t-\t\t";
    for (char c : d.text) out += (c == '\n' || c == '\t') ? ' ' : c;
    out += '\n';
  }
  return out;
}

}  // namespace sarcasm_test
