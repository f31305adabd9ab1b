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

#include "sarcasm/semigraph.h"

#include <algorithm>

#include "sarcasm/error.h"

namespace sarcasm {
namespace {

template <typename Label>
std::map<Label, VertexClass> ClassifyPositions(
    const std::vector<Label>& vertices,
    const std::vector<std::vector<Label>>& edges) {
  struct Seen {
    bool end = false;
    bool middle = false;
  };
  std::map<Label, Seen> seen;
  for (const auto& v : vertices) seen[v];
  for (const auto& e : edges) {
    for (size_t i = 0; i < e.size(); ++i) {
      Seen& s = seen[e[i]];
      if (i == 0 || i + 1 == e.size()) {
        s.end = true;
      } else {
        s.middle = true;
      }
    }
  }
  std::map<Label, VertexClass> out;
  for (const auto& [v, s] : seen) {
    if (s.end && s.middle) {
      out[v] = VertexClass::kMiddleEnd;
    } else if (s.end) {
      out[v] = VertexClass::kEnd;
    } else if (s.middle) {
      out[v] = VertexClass::kMiddle;
    } else {
      out[v] = VertexClass::kIsolated;
    }
  }
  return out;
}

std::string DuplicateList(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

// Throws if any id repeats within `ids` or already exists in `g`.
void CheckFreshIds(const Semigraph& g, const std::vector<std::string>& ids) {
  std::vector<std::string> offenders;
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (g.HasDocument(id) || !seen.insert(id).second) offenders.push_back(id);
  }
  if (!offenders.empty()) {
    throw Error(ErrorCode::kDuplicateDocument,
                "duplicate document id(s): " + DuplicateList(offenders));
  }
}

size_t IntersectionSize(const PatternSet& a, const PatternSet& b) {
  size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Plain semigraphs.

const char* VertexClassName(VertexClass c) {
  switch (c) {
    case VertexClass::kEnd:
      return "end";
    case VertexClass::kMiddle:
      return "middle";
    case VertexClass::kMiddleEnd:
      return "middle-end";
    case VertexClass::kIsolated:
      return "isolated";
  }
  return "?";
}

bool SameEdge(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.size() != b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin()) ||
         std::equal(a.begin(), a.end(), b.rbegin());
}

void ValidateTopology(const Topology& t) {
  std::set<std::string> known(t.vertices.begin(), t.vertices.end());
  if (known.size() != t.vertices.size()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate vertex in semigraph");
  }
  for (size_t i = 0; i < t.edges.size(); ++i) {
    const auto& e = t.edges[i];
    if (e.size() < 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + std::to_string(i) + " has fewer than 2 vertices");
    }
    for (const auto& v : e) {
      if (!known.contains(v)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "edge " + std::to_string(i) + " uses unknown vertex " + v);
      }
    }
    for (size_t j = 0; j < i; ++j) {
      if (SameEdge(e, t.edges[j])) {
        throw Error(ErrorCode::kInvalidArgument,
                    "edges " + std::to_string(j) + " and " + std::to_string(i) +
                        " are equal");
      }
    }
  }
}

std::map<std::string, VertexClass> ClassifyVertices(const Topology& t) {
  return ClassifyPositions(t.vertices, t.edges);
}

bool IsUniform(const Topology& t) {
  return std::all_of(t.edges.begin(), t.edges.end(), [&](const auto& e) {
    return e.size() == t.edges.front().size();
  });
}

bool SatisfiesCommonVertexCondition(const Topology& t) {
  for (size_t i = 0; i < t.edges.size(); ++i) {
    const std::set<std::string> a(t.edges[i].begin(), t.edges[i].end());
    for (size_t j = i + 1; j < t.edges.size(); ++j) {
      const bool shared = std::any_of(t.edges[j].begin(), t.edges[j].end(),
                                      [&](const auto& v) { return a.contains(v); });
      if (!shared) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Knowledge semigraph.

const char* VertexRoleName(VertexRole role) {
  switch (role) {
    case VertexRole::kTrainSarcastic:
      return "train-sarcastic";
    case VertexRole::kTrainNonSarcastic:
      return "train-non-sarcastic";
    case VertexRole::kTest:
      return "test";
  }
  return "?";
}

VertexRole ParseVertexRole(std::string_view name) {
  for (VertexRole r : {VertexRole::kTrainSarcastic, VertexRole::kTrainNonSarcastic,
                       VertexRole::kTest}) {
    if (name == VertexRoleName(r)) return r;
  }
  throw Error(ErrorCode::kParse, "unknown vertex role '" + std::string(name) + "'");
}

VertexRole TrainRole(ClassLabel label) {
  return label == ClassLabel::kSarcastic ? VertexRole::kTrainSarcastic
                                         : VertexRole::kTrainNonSarcastic;
}

std::optional<ClassLabel> RoleClass(VertexRole role) {
  switch (role) {
    case VertexRole::kTrainSarcastic:
      return ClassLabel::kSarcastic;
    case VertexRole::kTrainNonSarcastic:
      return ClassLabel::kNonSarcastic;
    case VertexRole::kTest:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string FormatVertexId(const VertexId& id) {
  return id.doc + "#" + FeatureKindCode(id.kind);
}

VertexId ParseVertexId(std::string_view text) {
  const size_t hash = text.rfind('#');
  if (hash == std::string_view::npos) {
    throw Error(ErrorCode::kParse, "bad vertex id '" + std::string(text) + "'");
  }
  return VertexId{std::string(text.substr(0, hash)),
                  ParseFeatureKind(text.substr(hash + 1))};
}

const FeatureVertex* Semigraph::FindVertex(const VertexId& id) const {
  auto it = vertices_.find(id);
  return it == vertices_.end() ? nullptr : &it->second;
}

std::optional<VertexRole> Semigraph::DocumentRole(std::string_view doc) const {
  auto it = vertices_.lower_bound(VertexId{std::string(doc), FeatureKind::kBigram});
  if (it == vertices_.end() || it->first.doc != doc) return std::nullopt;
  return it->second.role;
}

bool Semigraph::HasDocument(std::string_view doc) const {
  return DocumentRole(doc).has_value();
}

std::vector<std::string> Semigraph::Documents(std::optional<VertexRole> role) const {
  std::vector<std::string> out;
  for (const auto& [id, v] : vertices_) {
    if (role && v.role != *role) continue;
    if (out.empty() || out.back() != id.doc) out.push_back(id.doc);
  }
  return out;
}

size_t Semigraph::test_document_count() const {
  return Documents(VertexRole::kTest).size();
}

std::uint64_t Semigraph::WeightNumerator(const VertexId& id) const {
  auto it = numerators_.find(id);
  if (it == numerators_.end()) {
    throw Error(ErrorCode::kUnknownVertex,
                "no training vertex '" + FormatVertexId(id) + "'");
  }
  return it->second;
}

std::vector<const GraphicalEdge*> Semigraph::IncidentEdges(const VertexId& id) const {
  std::vector<const GraphicalEdge*> out;
  auto it = incidence_.find(id);
  if (it == incidence_.end()) return out;
  out.reserve(it->second.size());
  for (const EdgeKey& key : it->second) out.push_back(&edges_.at(key));
  return out;
}

Topology Semigraph::ToTopology() const {
  Topology t;
  for (const auto& [id, v] : vertices_) t.vertices.push_back(FormatVertexId(id));
  for (const auto& [doc, e] : semiedges_) {
    std::vector<std::string> tuple;
    for (const auto& v : e.vertices) tuple.push_back(FormatVertexId(v));
    t.edges.push_back(std::move(tuple));
  }
  for (const auto& [key, e] : edges_) {
    t.edges.push_back({FormatVertexId(e.test), FormatVertexId(e.train)});
  }
  return t;
}

bool Semigraph::operator==(const Semigraph& other) const {
  return mask_ == other.mask_ && stats_ == other.stats_ &&
         vertices_ == other.vertices_ && semiedges_ == other.semiedges_ &&
         edges_ == other.edges_;
}

void Semigraph::AddDocumentVertices(const std::string& doc, VertexRole role,
                                    DocumentPatterns patterns) {
  SemiEdge edge;
  for (FeatureKind kind : mask_.kinds()) {
    VertexId id{doc, kind};
    edge.vertices.push_back(id);
    vertices_.emplace(id, FeatureVertex{id, role,
                                        std::move(patterns[Index(kind)]),
                                        std::nullopt});
  }
  // A single enabled family leaves nothing to join.
  if (edge.vertices.size() >= 2) semiedges_.emplace(doc, std::move(edge));
}

void Semigraph::RecomputeTrainWeights() {
  for (auto& [id, v] : vertices_) {
    const auto label = RoleClass(v.role);
    if (!label) continue;
    const FeatureWeight w = ComputeFeatureWeight(
        id.doc, id.kind, v.patterns, *label, stats_.counts, stats_.totals);
    v.weight = w.weight;
    numerators_[id] = w.numerator;
  }
}

void Semigraph::RefreshEdgeWeights() {
  for (auto& [key, e] : edges_) {
    e.weight = *vertices_.at(e.train).weight * static_cast<double>(e.matched);
  }
}

void Semigraph::IndexTrainVertex(const FeatureVertex& v) {
  for (const Pattern& p : v.patterns) train_index_[p].push_back(v.id);
}

void Semigraph::LinkTestVertex(const FeatureVertex& test,
                               const std::set<std::string>* only_docs) {
  std::map<VertexId, std::uint64_t> matched;
  for (const Pattern& p : test.patterns) {
    auto it = train_index_.find(p);
    if (it == train_index_.end()) continue;
    for (const VertexId& train : it->second) {
      if (only_docs && !only_docs->contains(train.doc)) continue;
      ++matched[train];
    }
  }
  for (const auto& [train, m] : matched) {
    const double w = *vertices_.at(train).weight * static_cast<double>(m);
    EdgeKey key{test.id, train};
    edges_[key] = GraphicalEdge{test.id, train, m, w};
    incidence_[test.id].insert(key);
    incidence_[train].insert(key);
  }
}

Semigraph Semigraph::FromParts(FeatureMask mask, TrainingStats stats,
                               std::vector<FeatureVertex> vertices,
                               std::vector<SemiEdge> semiedges,
                               std::vector<GraphicalEdge> edges) {
  auto bad = [](const std::string& what) {
    return Error(ErrorCode::kParse, "inconsistent model: " + what);
  };
  Semigraph g;
  g.mask_ = mask;
  g.stats_ = std::move(stats);
  for (auto& v : vertices) {
    const std::string name = FormatVertexId(v.id);
    if (!mask.enabled(v.id.kind)) throw bad("vertex " + name + " of a disabled family");
    if (RoleClass(v.role).has_value() != v.weight.has_value()) {
      throw bad("vertex " + name + " weight does not match its role");
    }
    for (const Pattern& p : v.patterns) {
      if (p.kind != v.id.kind ||
          static_cast<int>(p.items.size()) != PatternArity(p.kind)) {
        throw bad("vertex " + name + " holds a malformed pattern");
      }
    }
    if (!g.vertices_.emplace(v.id, std::move(v)).second) {
      throw bad("duplicate vertex " + name);
    }
  }
  // Every document must carry exactly the enabled families with one role.
  for (const std::string& doc : g.Documents()) {
    const VertexRole role = *g.DocumentRole(doc);
    for (FeatureKind kind : mask.kinds()) {
      const FeatureVertex* v = g.FindVertex({doc, kind});
      if (!v || v->role != role) throw bad("document " + doc + " is incomplete");
    }
  }
  for (auto& e : semiedges) {
    if (e.vertices.empty()) throw bad("empty semiedge");
    const std::string doc = e.vertices.front().doc;
    SemiEdge expected;
    for (FeatureKind kind : mask.kinds()) expected.vertices.push_back({doc, kind});
    if (!(e == expected) || !g.HasDocument(doc)) {
      throw bad("semiedge of " + doc + " does not match its vertices");
    }
    if (!g.semiedges_.emplace(doc, std::move(e)).second) {
      throw bad("second semiedge for " + doc);
    }
  }
  if (mask.count() >= 2 && g.semiedges_.size() != g.Documents().size()) {
    throw bad("missing semiedges");
  }

  const Semigraph reference = [&] {
    Semigraph r = g;
    r.RecomputeTrainWeights();
    return r;
  }();
  for (const auto& [id, v] : g.vertices_) {
    if (v.weight != reference.vertices_.at(id).weight) {
      throw bad("stored weight of " + FormatVertexId(id) +
                " differs from counts and totals");
    }
    if (v.weight) g.IndexTrainVertex(v);
  }
  g.numerators_ = reference.numerators_;

  for (auto& e : edges) {
    const FeatureVertex* test = g.FindVertex(e.test);
    const FeatureVertex* train = g.FindVertex(e.train);
    if (!test || !train || test->role != VertexRole::kTest || !train->weight ||
        e.test.kind != e.train.kind) {
      throw bad("graphical edge " + FormatVertexId(e.test) + " - " +
                FormatVertexId(e.train) + " has invalid endpoints");
    }
    if (e.matched == 0 || e.matched != IntersectionSize(test->patterns, train->patterns) ||
        e.weight != *train->weight * static_cast<double>(e.matched)) {
      throw bad("graphical edge " + FormatVertexId(e.test) + " - " +
                FormatVertexId(e.train) + " has a wrong weight");
    }
    EdgeKey key{e.test, e.train};
    if (!g.edges_.emplace(key, e).second) throw bad("duplicate graphical edge");
    g.incidence_[e.test].insert(key);
    g.incidence_[e.train].insert(key);
  }
  return g;
}

Semigraph BuildTrainGraph(std::span<const LabeledDocument> train,
                          const ClassCounts& counts, const CorpusTotals& totals,
                          const FeatureMask& mask) {
  if (train.empty()) {
    throw Error(ErrorCode::kEmptyTrainingSet, "training set is empty");
  }
  Semigraph g;
  g.mask_ = mask;
  std::vector<std::string> ids;
  for (const auto& d : train) ids.push_back(d.doc.id);
  CheckFreshIds(g, ids);

  g.stats_ = TrainingStats{totals, counts};
  for (const auto& d : train) {
    g.AddDocumentVertices(d.doc.id, TrainRole(d.label), ExtractPatterns(d.doc, mask));
  }
  g.RecomputeTrainWeights();
  for (const auto& [id, v] : g.vertices_) g.IndexTrainVertex(v);
  return g;
}

Semigraph BuildTrainGraph(std::span<const LabeledDocument> train,
                          const FeatureMask& mask) {
  return BuildTrainGraph(train, ComputeClassCounts(train, mask),
                         ComputeTotals(train, mask), mask);
}

Semigraph AttachTestDocuments(Semigraph g, std::span<const TaggedDocument> tests) {
  if (g.Documents(VertexRole::kTrainSarcastic).empty() &&
      g.Documents(VertexRole::kTrainNonSarcastic).empty()) {
    throw Error(ErrorCode::kEmptyTrainingSet,
                "cannot attach test documents to a graph without training documents");
  }
  std::vector<std::string> ids;
  for (const auto& t : tests) ids.push_back(t.id);
  CheckFreshIds(g, ids);

  for (const auto& t : tests) {
    g.AddDocumentVertices(t.id, VertexRole::kTest, ExtractPatterns(t, g.mask_));
    for (FeatureKind kind : g.mask_.kinds()) {
      g.LinkTestVertex(g.vertices_.at({t.id, kind}), nullptr);
    }
  }
  return g;
}

void InsertTrainingDocuments(Semigraph& g, std::span<const LabeledDocument> docs) {
  if (docs.empty()) return;
  std::vector<std::string> ids;
  for (const auto& d : docs) ids.push_back(d.doc.id);
  CheckFreshIds(g, ids);

  for (const auto& d : docs) {
    const PatternCounts counts = CountPatterns(d.doc, g.mask_);
    g.stats_.counts.Add(counts, d.label);
    AddToTotals(g.stats_.totals, counts);
    DocumentPatterns sets;
    for (int k = 0; k < kNumFeatureKinds; ++k) {
      for (const auto& [p, n] : counts[k]) sets[k].insert(sets[k].end(), p);
    }
    g.AddDocumentVertices(d.doc.id, TrainRole(d.label), std::move(sets));
  }
  g.RecomputeTrainWeights();

  const std::set<std::string> fresh(ids.begin(), ids.end());
  for (const auto& id : ids) {
    for (FeatureKind kind : g.mask_.kinds()) {
      g.IndexTrainVertex(g.vertices_.at({id, kind}));
    }
  }
  for (const auto& [id, v] : g.vertices_) {
    if (v.role == VertexRole::kTest) g.LinkTestVertex(v, &fresh);
  }
  g.RefreshEdgeWeights();
}

void InsertTrainingDocument(Semigraph& g, const TaggedDocument& doc, ClassLabel label) {
  const LabeledDocument d{doc, label};
  InsertTrainingDocuments(g, std::span<const LabeledDocument>(&d, 1));
}

std::map<VertexId, VertexClass> ClassifyVertices(const Semigraph& g) {
  std::vector<VertexId> vertices;
  for (const auto& [id, v] : g.vertices()) vertices.push_back(id);
  std::vector<std::vector<VertexId>> edges;
  for (const auto& [doc, e] : g.semiedges()) edges.push_back(e.vertices);
  for (const auto& [key, e] : g.graphical_edges()) edges.push_back({e.test, e.train});
  return ClassifyPositions(vertices, edges);
}

bool IsUniform(const Semigraph& g) { return IsUniform(g.ToTopology()); }

std::uint64_t Degree(const Semigraph& g, const VertexId& v,
                     std::optional<VertexRole> filter) {
  if (!g.FindVertex(v)) {
    throw Error(ErrorCode::kUnknownVertex, "unknown vertex " + FormatVertexId(v));
  }
  std::uint64_t degree = 0;
  for (const GraphicalEdge* e : g.IncidentEdges(v)) {
    const VertexId& other = e->test == v ? e->train : e->test;
    if (!filter || g.FindVertex(other)->role == *filter) ++degree;
  }
  return degree;
}

}  // namespace sarcasm
