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


// Acceptance suite. Runs every acceptance criterion and prints one
// PASS / FAIL / WAIVED line per criterion. Exits non-zero if any criterion
// fails.
//
// The corpus-scale criterion reads the labelled review corpus from the path
// in SARCASM_FILATOVA_CORPUS (TSV or JSON lines); it is waived when the
// variable is unset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fixtures.h"
#include "oracle.h"
#include "sarcasm/corpus.h"
#include "sarcasm/eval.h"
#include "sarcasm/features.h"
#include "sarcasm/model_io.h"
#include "sarcasm/pipeline.h"
#include "sarcasm/polarity.h"
#include "sarcasm/semigraph.h"

namespace sarcasm_test {
namespace {

using namespace sarcasm;  // NOLINT

enum class Status { kPass, kFail, kWaived };

struct Verdict {
  Status status = Status::kPass;
  std::string detail;

  void Fail(const std::string& why) {
    if (status != Status::kFail) detail.clear();
    status = Status::kFail;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

bool RelClose(double got, double want, double rel) {
  if (want == 0.0) return got == 0.0;
  return std::abs(got - want) <= rel * std::abs(want);
}

std::string Fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

int OracleLabel(ClassLabel c) { return c == ClassLabel::kSarcastic ? 0 : 1; }

// 1. Per-document, per-family, per-class weights against the oracle.
Verdict OracleWeights() {
  Verdict v;
  const auto start = Clock::now();
  int compared = 0;
  for (const Fixture& f : ToyFixtures()) {
    const auto train = TagLabeled(f.train);
    const Oracle oracle = MakeOracle(f);
    const ClassCounts counts = ComputeClassCounts(train);
    const CorpusTotals totals = ComputeTotals(train);
    for (const auto& l : train) {
      const DocumentPatterns patterns = ExtractPatterns(l.doc);
      for (FeatureKind k : kAllFeatureKinds) {
        for (ClassLabel c : kAllClasses) {
          const double got =
              ComputeFeatureWeight(l.doc.id, k, patterns[Index(k)], c, counts,
                                   totals)
                  .weight;
          const double want =
              oracle.Weight(l.doc.id, Index(k) + 1, OracleLabel(c));
          ++compared;
          if (!RelClose(got, want, 1e-9)) {
            v.Fail(f.name + "/" + l.doc.id + "/" + FeatureKindCode(k) + "/" +
                   ClassLabelName(c) + ": " + Fmt("%.17g", got) + " vs " +
                   Fmt("%.17g", want));
          }
        }
      }
    }
  }
  const double secs = Seconds(start);
  if (secs >= 1.0) v.Fail("runtime " + Fmt("%.3f", secs) + " s");
  if (v.status == Status::kPass) {
    v.detail = std::to_string(compared) + " weights within 1e-9, " +
               Fmt("%.3f", secs) + " s";
  }
  return v;
}

// 2. Graphical edges and class scores against the all-pairs oracle.
Verdict OracleEdgesAndScores() {
  Verdict v;
  const auto start = Clock::now();
  size_t edges = 0;
  size_t scores = 0;
  size_t cross_family = 0;
  for (const Fixture& f : ToyFixtures()) {
    const Oracle oracle = MakeOracle(f);
    const Semigraph g = BuildFixtureGraph(f);
    using Key = std::tuple<std::string, int, std::string, int>;
    std::map<Key, std::pair<std::uint64_t, double>> want;
    for (const OracleEdge& e : oracle.Edges()) {
      if (e.test_family != e.train_family) ++cross_family;
      want[{e.test_doc, e.test_family, e.train_doc, e.train_family}] = {
          e.matched, e.weight};
    }
    std::map<Key, std::pair<std::uint64_t, double>> got;
    for (const auto& [key, e] : g.graphical_edges()) {
      got[{e.test.doc, Index(e.test.kind) + 1, e.train.doc,
           Index(e.train.kind) + 1}] = {e.matched, e.weight};
    }
    bool same_set = got.size() == want.size();
    for (const auto& [k, mw] : want) {
      auto it = got.find(k);
      if (it == got.end() || it->second.first != mw.first) {
        same_set = false;
        continue;
      }
      if (!RelClose(it->second.second, mw.second, 1e-9)) {
        v.Fail(f.name + ": edge weight " + Fmt("%.17g", it->second.second) +
               " vs " + Fmt("%.17g", mw.second));
      }
    }
    if (!same_set) v.Fail(f.name + ": edge sets differ");
    edges += want.size();
    for (const Document& d : f.test) {
      const PolarityResult r = ScoreDocument(g, d.id);
      for (ClassLabel c : kAllClasses) {
        const double s = c == ClassLabel::kSarcastic ? r.sarcastic_score
                                                     : r.non_sarcastic_score;
        const double o = oracle.Score(d.id, OracleLabel(c));
        ++scores;
        if (!RelClose(s, o, 1e-9)) {
          v.Fail(f.name + "/" + d.id + " " + ClassLabelName(c) + " score " +
                 Fmt("%.17g", s) + " vs " + Fmt("%.17g", o));
        }
      }
    }
  }
  if (cross_family != 0) {
    v.Fail(std::to_string(cross_family) + " cross-family oracle edges");
  }
  const double secs = Seconds(start);
  if (secs >= 1.0) v.Fail("runtime " + Fmt("%.3f", secs) + " s");
  if (v.status == Status::kPass) {
    v.detail = std::to_string(edges) + " edges identical, " +
               std::to_string(scores) + " scores within 1e-9, " +
               Fmt("%.3f", secs) + " s";
  }
  return v;
}

// 3. One-at-a-time insertion equals a batch build.
Verdict IncrementalEqualsBatch() {
  Verdict v;
  std::string timings;
  for (size_t n : {10u, 50u, 200u}) {
    const auto start = Clock::now();
    const auto docs = TagLabeled(SyntheticCorpus(n, 1000 + n));
    Semigraph g;
    for (const auto& d : docs) InsertTrainingDocument(g, d.doc, d.label);
    const Semigraph batch = BuildTrainGraph(docs);
    const double secs = Seconds(start);
    if (!(g == batch)) v.Fail(std::to_string(n) + " docs: graphs differ");
    Model a, b;
    a.graph = g;
    b.graph = batch;
    if (SerializeModel(a) != SerializeModel(b)) {
      v.Fail(std::to_string(n) + " docs: serialized graphs differ");
    }
    if (n == 200 && secs >= 30.0) {
      v.Fail("200 docs took " + Fmt("%.2f", secs) + " s");
    }
    if (!timings.empty()) timings += ", ";
    timings += std::to_string(n) + " docs " + Fmt("%.3f", secs) + " s";
  }
  if (v.status == Status::kPass) v.detail = "identical at " + timings;
  return v;
}

// 4. Scaling every corpus total by c divides scores by c and keeps decisions
// and normalized polarities.
Verdict ScaleInvariance() {
  Verdict v;
  double worst_score = 0.0;
  size_t checked = 0;
  for (const Fixture& f : ToyFixtures()) {
    const auto train = TagLabeled(f.train);
    const auto tests = TagUnlabeled(f.test);
    const ClassCounts counts = ComputeClassCounts(train);
    const CorpusTotals totals = ComputeTotals(train);
    const Semigraph base =
        AttachTestDocuments(BuildTrainGraph(train, counts, totals), tests);
    for (std::uint64_t c : {2u, 10u}) {
      CorpusTotals scaled = totals;
      for (auto& t : scaled.total) t *= c;
      const Semigraph g =
          AttachTestDocuments(BuildTrainGraph(train, counts, scaled), tests);
      for (const auto& t : tests) {
        const PolarityResult a = ScoreDocument(base, t.id);
        const PolarityResult b = ScoreDocument(g, t.id);
        const double dc = static_cast<double>(c);
        for (auto [x, y] : {std::pair{a.sarcastic_score, b.sarcastic_score},
                            std::pair{a.non_sarcastic_score,
                                      b.non_sarcastic_score}}) {
          if (!RelClose(y, x / dc, 1e-9)) {
            v.Fail(f.name + "/" + t.id + " c=" + std::to_string(c) +
                   ": score " + Fmt("%.17g", y) + " vs " + Fmt("%.17g", x / dc));
          } else if (x != 0.0) {
            worst_score = std::max(worst_score, std::abs(y - x / dc) / (x / dc));
          }
        }
        if (a.decision != b.decision) {
          v.Fail(f.name + "/" + t.id + " c=" + std::to_string(c) +
                 ": decision changed");
        }
        if (a.normalized != b.normalized) {
          v.Fail(f.name + "/" + t.id + " c=" + std::to_string(c) +
                 ": normalized " +
                 (a.normalized ? Fmt("%.17g", *a.normalized) : "NA") + " -> " +
                 (b.normalized ? Fmt("%.17g", *b.normalized) : "NA"));
        }
        ++checked;
      }
    }
  }
  if (v.status == Status::kPass) {
    v.detail = std::to_string(checked) +
               " test documents, decisions and normalized values equal, "
               "worst score deviation " +
               Fmt("%.2g", worst_score);
  }
  return v;
}

// 5. A one-document corpus with all-distinct patterns weighs exactly 1.
Verdict SingleDocumentNormalization() {
  Verdict v;
  const std::vector<std::string> texts = {"Oh really great phone?!",
                                          "a b c",
                                          "Wow, so very nice. Oh, quite good!"};
  int kinds_checked = 0;
  for (size_t i = 0; i < texts.size(); ++i) {
    const std::string id = "single" + std::to_string(i);
    const TaggedDocument doc = TagText(id, texts[i]);
    const PatternCounts occurrences = CountPatterns(doc);
    const std::vector<LabeledDocument> corpus = {
        {doc, ClassLabel::kSarcastic}};
    const Semigraph g = BuildTrainGraph(corpus);
    for (FeatureKind k : kAllFeatureKinds) {
      const auto& occ = occurrences[Index(k)];
      if (occ.empty()) continue;
      bool distinct = true;
      for (const auto& [p, n] : occ) distinct = distinct && n == 1;
      if (!distinct) continue;
      const double w = *g.FindVertex({id, k})->weight;
      ++kinds_checked;
      if (w != 1.0) {
        v.Fail("'" + texts[i] + "' " + FeatureKindCode(k) + " weight " +
               Fmt("%.17g", w));
      }
    }
  }
  if (kinds_checked < 7) {
    v.Fail("only " + std::to_string(kinds_checked) + " family weights checked");
  }
  if (v.status == Status::kPass) {
    v.detail = std::to_string(kinds_checked) + " family weights exactly 1.0";
  }
  return v;
}

// 6. Metrics on hand-tallied matrices, and F for P = 0.87, R = 0.79.
Verdict MetricsCorrectness() {
  Verdict v;
  struct Case {
    ConfusionMatrix m;
    double p, r, f;        // sarcastic
    double pn, rn, fn;     // non-sarcastic
    std::array<double, 4> pct;
  };
  const std::vector<Case> cases = {
      {{2, 0, 0, 2}, 1, 1, 1, 1, 1, 1, {50, 0, 0, 50}},
      {{0, 0, 3, 0}, 0, 0, 0, 0, 0, 0, {0, 0, 100, 0}},
      {{3, 1, 1, 3}, 0.75, 0.75, 0.75, 0.75, 0.75, 0.75, {37.5, 12.5, 12.5, 37.5}},
      {{1, 1, 3, 3}, 0.5, 0.25, 1.0 / 3.0, 0.5, 0.75, 0.6, {12.5, 12.5, 37.5, 37.5}},
      {{4, 4, 0, 8}, 0.5, 1, 2.0 / 3.0, 1, 2.0 / 3.0, 0.8, {25, 25, 0, 50}},
  };
  for (size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    const MetricsReport r = Metrics(c.m);
    const bool ok = r.sarcastic.precision == c.p && r.sarcastic.recall == c.r &&
                    r.sarcastic.f_measure == c.f &&
                    r.non_sarcastic.precision == c.pn &&
                    r.non_sarcastic.recall == c.rn &&
                    r.non_sarcastic.f_measure == c.fn && r.matrix_pct == c.pct;
    if (!ok) v.Fail("matrix " + std::to_string(i + 1) + " differs");
  }
  const double f = FMeasure(0.87, 0.79);
  const std::string rounded = Fmt("%.2f", f);
  if (rounded != "0.83") v.Fail("F(0.87, 0.79) rounds to " + rounded);
  if (v.status == Status::kPass) {
    v.detail = "5 matrices exact; F(0.87, 0.79) = " + Fmt("%.4f", f) +
               " -> " + rounded;
  }
  return v;
}

// 7. Vertex classes of the eight-vertex example semigraph.
Verdict ExampleSemigraph() {
  Verdict v;
  const Topology t{{"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"},
                   {{"v1", "v2", "v3"},
                    {"v1", "v5", "v7"},
                    {"v1", "v5", "v6"},
                    {"v6", "v4", "v5", "v7"},
                    {"v6", "v7"},
                    {"v2", "v5"}}};
  const auto classes = ClassifyVertices(t);
  for (const char* end : {"v1", "v3", "v6", "v7"}) {
    if (classes.at(end) != VertexClass::kEnd) {
      v.Fail(std::string(end) + " is " + VertexClassName(classes.at(end)));
    }
  }
  if (classes.at("v8") != VertexClass::kIsolated) v.Fail("v8 not isolated");
  if (IsUniform(t)) v.Fail("reported uniform");
  if (v.status == Status::kPass) {
    v.detail = "v1 v3 v6 v7 end, v8 isolated, not uniform";
  }
  return v;
}

// 8. End-to-end run on the full review corpus.
Verdict CorpusScaleRun() {
  Verdict v;
  const char* path = std::getenv("SARCASM_FILATOVA_CORPUS");
  if (path == nullptr || *path == '\0') {
    v.status = Status::kWaived;
    v.detail = "SARCASM_FILATOVA_CORPUS not set; corpus unavailable";
    return v;
  }
  const auto start = Clock::now();
  const auto docs = LoadCorpus(path);
  size_t s = 0;
  size_t n = 0;
  for (const auto& d : docs) {
    if (d.label == ClassLabel::kSarcastic) ++s;
    if (d.label == ClassLabel::kNonSarcastic) ++n;
  }
  const Split split = StratifiedSplit(docs, 0.2, 42);
  const EvaluationRun run =
      EvaluateRun(split.train, split.test, RunConfig{}, Builtin());
  const double secs = Seconds(start);
  const ClassMetrics& m = run.report.sarcastic;
  auto consistent = [](double got, double paper) {
    return std::abs(got - paper) <= 0.10 ? "consistent" : "outside 0.10";
  };
  v.detail = std::to_string(s) + " sarcastic / " + std::to_string(n) +
             " regular; P " + Fmt("%.3f", m.precision) + " (" +
             consistent(m.precision, 0.87) + "), R " + Fmt("%.3f", m.recall) +
             " (" + consistent(m.recall, 0.79) + "), F " +
             Fmt("%.3f", m.f_measure) + " (" + consistent(m.f_measure, 0.83) +
             "), " + Fmt("%.1f", secs) + " s";
  if (secs >= 300.0) v.Fail("runtime " + Fmt("%.1f", secs) + " s; " + v.detail);
  if (m.f_measure < 0.70) v.Fail("F below 0.70; " + v.detail);
  return v;
}

// 9. save -> load -> save is byte-identical.
Verdict PersistenceRoundTrip() {
  Verdict v;
  TempDir dir;
  int models = 0;
  std::vector<Model> all;
  for (const Fixture& f : ToyFixtures()) {
    Model trained;
    trained.graph = BuildTrainGraph(TagLabeled(f.train));
    all.push_back(trained);
    Model attached;
    attached.graph = BuildFixtureGraph(f);
    all.push_back(attached);
  }
  Model synthetic;
  synthetic.graph = BuildTrainGraph(TagLabeled(SyntheticCorpus(50, 77)));
  all.push_back(synthetic);
  for (const Model& m : all) {
    const std::string a = dir.Path("a.json");
    const std::string b = dir.Path("b.json");
    SaveModel(m, a);
    const Model loaded = LoadModel(a);
    SaveModel(loaded, b);
    ++models;
    if (ReadFile(a) != ReadFile(b)) {
      v.Fail("model " + std::to_string(models) + " bytes differ");
    }
    if (!(loaded == m)) {
      v.Fail("model " + std::to_string(models) + " loads unequal");
    }
  }
  if (v.status == Status::kPass) {
    v.detail = std::to_string(models) + " models byte-identical";
  }
  return v;
}

}  // namespace
}  // namespace sarcasm_test

int main() {
  using sarcasm_test::Status;
  using sarcasm_test::Verdict;
  const std::vector<std::pair<const char*, std::function<Verdict()>>>
      criteria = {
          {"oracle weights", sarcasm_test::OracleWeights},
          {"oracle edges and scores", sarcasm_test::OracleEdgesAndScores},
          {"incremental equals batch", sarcasm_test::IncrementalEqualsBatch},
          {"scale invariance", sarcasm_test::ScaleInvariance},
          {"single-document normalization",
           sarcasm_test::SingleDocumentNormalization},
          {"metrics", sarcasm_test::MetricsCorrectness},
          {"example semigraph", sarcasm_test::ExampleSemigraph},
          {"corpus-scale run", sarcasm_test::CorpusScaleRun},
          {"persistence round trip", sarcasm_test::PersistenceRoundTrip},
      };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.Fail(std::string("exception: ") + e.what());
    }
    const char* tag = v.status == Status::kPass   ? "PASS"
                      : v.status == Status::kFail ? "FAIL"
                                                  : "WAIVED";
    if (v.status == Status::kFail) ++failures;
    std::printf("[%s] criterion %zu %s: %s\n", tag, i + 1, criteria[i].first,
                v.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
