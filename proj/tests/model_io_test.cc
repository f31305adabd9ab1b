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


#include "sarcasm/model_io.h"

#include <gtest/gtest.h>

#include <limits>

#include "json.hpp"

#include "fixtures.h"
#include "sarcasm/error.h"

namespace sarcasm {
namespace {

using sarcasm_test::ToyFixtures;

std::vector<Model> FixtureModels() {
  std::vector<Model> models;
  for (const auto& f : ToyFixtures()) {
    Model trained;
    trained.graph = BuildTrainGraph(sarcasm_test::TagLabeled(f.train));
    models.push_back(trained);
    Model with_tests;
    with_tests.graph = sarcasm_test::BuildFixtureGraph(f);
    models.push_back(with_tests);
  }
  Model masked;
  FeatureMask mask;
  mask.set(FeatureKind::kTrigram, false);
  mask.set(FeatureKind::kPunctuation, false);
  masked.graph = BuildTrainGraph(sarcasm_test::TagLabeled(ToyFixtures()[0].train), mask);
  masked.tagger = "/some/lexicon.tsv";
  masked.tagger_suffixes = "/some/suffixes.tsv";
  models.push_back(masked);
  return models;
}

TEST(ModelIoTest, RoundTripEqualsOriginal) {
  for (const Model& m : FixtureModels()) {
    EXPECT_EQ(DeserializeModel(SerializeModel(m)), m);
  }
}

TEST(ModelIoTest, ResaveIsByteIdentical) {
  sarcasm_test::TempDir dir;
  for (const Model& m : FixtureModels()) {
    SaveModel(m, dir.Path("a.json"));
    SaveModel(LoadModel(dir.Path("a.json")), dir.Path("b.json"));
    EXPECT_EQ(sarcasm_test::ReadFile(dir.Path("a.json")),
              sarcasm_test::ReadFile(dir.Path("b.json")));
  }
}

TEST(ModelIoTest, TopLevelKeys) {
  const auto j = nlohmann::json::parse(SerializeModel(FixtureModels()[1]));
  for (const char* key : {"version", "config", "totals", "class_counts",
                          "vertices", "semiedges", "graphical_edges"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["version"], kModelFormatVersion);
  EXPECT_FALSE(j["graphical_edges"].empty());
}

TEST(ModelIoTest, NewerVersionRejected) {
  auto j = nlohmann::json::parse(SerializeModel(FixtureModels()[0]));
  j["version"] = kModelFormatVersion + 1;
  try {
    DeserializeModel(j.dump());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedVersion);
  }
}

TEST(ModelIoTest, CorruptContent) {
  EXPECT_THROW(DeserializeModel("{not json"), Error);
  EXPECT_THROW(DeserializeModel("{}"), Error);
  auto j = nlohmann::json::parse(SerializeModel(FixtureModels()[0]));
  j["vertices"][0]["weight"] = "0.123456";
  EXPECT_THROW(DeserializeModel(j.dump()), Error);
  EXPECT_THROW(LoadModel("/nonexistent/model.json"), Error);
}

TEST(ModelIoTest, ExactDoubles) {
  for (double v : {0.0, 1.0, 0.1, 1.0 / 3.0, 2.0 / 3.0, 1e-300, 123456.789,
                   std::numeric_limits<double>::denorm_min()}) {
    EXPECT_EQ(ParseExactDouble(FormatExactDouble(v)), v);
  }
  EXPECT_EQ(FormatExactDouble(0.5), "0.5");
  EXPECT_THROW(ParseExactDouble("abc"), Error);
}

}  // namespace
}  // namespace sarcasm
