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

#include "sarcasm/polarity.h"

#include <cstdio>
#include <numeric>

#include "json.hpp"
#include "sarcasm/error.h"

namespace sarcasm {
namespace {

std::string Sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void RequireTestDocument(const Semigraph& g, std::string_view doc) {
  const auto role = g.DocumentRole(doc);
  if (!role || *role != VertexRole::kTest) {
    throw Error(ErrorCode::kUnknownDocument,
                "no test document '" + std::string(doc) + "' in the graph");
  }
}

// Class score with every family total divided by the gcd of all totals:
// sum over families of degree_c * (sum of numerator * matched) / reduced T.
double ReducedClassScore(const Semigraph& g, const std::string& doc,
                         ClassLabel label) {
  const VertexRole target = TrainRole(label);
  std::uint64_t divisor = 0;
  for (FeatureKind kind : g.mask().kinds()) {
    divisor = std::gcd(divisor, g.stats().totals[kind]);
  }
  double score = 0.0;
  for (FeatureKind kind : g.mask().kinds()) {
    std::uint64_t degree = 0;
    std::uint64_t mass = 0;
    for (const GraphicalEdge* e : g.IncidentEdges({doc, kind})) {
      if (g.FindVertex(e->train)->role != target) continue;
      ++degree;
      mass += g.WeightNumerator(e->train) * e->matched;
    }
    if (degree == 0) continue;
    const auto reduced = static_cast<double>(g.stats().totals[kind] / divisor);
    score += static_cast<double>(degree) * (static_cast<double>(mass) / reduced);
  }
  return score;
}

}  // namespace

double ClassScore(const Semigraph& g, std::string_view doc, ClassLabel label) {
  RequireTestDocument(g, doc);
  const VertexRole target = TrainRole(label);
  double score = 0.0;
  for (FeatureKind kind : g.mask().kinds()) {
    std::uint64_t degree = 0;
    double weight_sum = 0.0;
    for (const GraphicalEdge* e : g.IncidentEdges({std::string(doc), kind})) {
      if (g.FindVertex(e->train)->role != target) continue;
      ++degree;
      weight_sum += e->weight;
    }
    score += static_cast<double>(degree) * weight_sum;
  }
  return score;
}

PolarityResult ScoreDocument(const Semigraph& g, std::string_view doc) {
  PolarityResult r;
  r.doc = std::string(doc);
  r.sarcastic_score = ClassScore(g, doc, ClassLabel::kSarcastic);
  r.non_sarcastic_score = ClassScore(g, doc, ClassLabel::kNonSarcastic);
  for (FeatureKind kind : g.mask().kinds()) {
    r.evidence_edges += g.IncidentEdges({r.doc, kind}).size();
  }
  const double s = ReducedClassScore(g, r.doc, ClassLabel::kSarcastic);
  const double n = ReducedClassScore(g, r.doc, ClassLabel::kNonSarcastic);
  if (s + n > 0.0) r.normalized = s / (s + n);
  r.decision = s > n ? ClassLabel::kSarcastic : ClassLabel::kNonSarcastic;
  r.no_evidence = r.evidence_edges == 0;
  return r;
}

std::vector<PolarityResult> ScoreCorpus(const Semigraph& g,
                                        std::span<const std::string> docs) {
  std::vector<PolarityResult> results;
  std::string unknown;
  for (const auto& doc : docs) {
    try {
      results.push_back(ScoreDocument(g, doc));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnknownDocument) throw;
      if (!unknown.empty()) unknown += ", ";
      unknown += doc;
    }
  }
  if (!unknown.empty()) {
    throw Error(ErrorCode::kUnknownDocument, "unknown test document(s): " + unknown);
  }
  return results;
}

PolarityResult NoEvidenceResult(std::string doc) {
  PolarityResult r;
  r.doc = std::move(doc);
  r.no_evidence = true;
  return r;
}

std::string FormatResultLine(const PolarityResult& r) {
  std::string line = r.doc;
  line += '\t' + Sig6(r.sarcastic_score);
  line += '\t' + Sig6(r.non_sarcastic_score);
  line += '\t' + (r.normalized ? Sig6(*r.normalized) : std::string("NA"));
  line += '\t';
  line += ClassLabelName(r.decision);
  line += '\t' + std::to_string(r.evidence_edges);
  return line;
}

std::string FormatResultJson(const PolarityResult& r) {
  nlohmann::ordered_json j;
  j["doc"] = r.doc;
  j["sarcastic_score"] = r.sarcastic_score;
  j["non_sarcastic_score"] = r.non_sarcastic_score;
  j["normalized"] = r.normalized ? nlohmann::ordered_json(*r.normalized)
                                 : nlohmann::ordered_json(nullptr);
  j["decision"] = ClassLabelName(r.decision);
  j["evidence_edges"] = r.evidence_edges;
  j["no_evidence"] = r.no_evidence;
  return j.dump();
}

}  // namespace sarcasm
