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

// Semigraphs and the weighted knowledge semigraph used for scoring.
//
// A semigraph edge is an ordered tuple of two or more vertices; a tuple and
// its reverse are the same edge. The first and last vertex of an edge are its
// end vertices, the rest are middle vertices.
//
// The knowledge semigraph has one vertex per (document, feature family).
// Each document's vertices are joined by one null-weighted semiedge in family
// order. Test vertices are linked to training vertices of the same family by
// graphical (two-vertex) edges whose weight is the training vertex weight
// times the number of shared patterns.

#ifndef SARCASM_SEMIGRAPH_H_
#define SARCASM_SEMIGRAPH_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sarcasm/features.h"

namespace sarcasm {

// ---------------------------------------------------------------------------
// Plain semigraphs over string-labelled vertices.

enum class VertexClass { kEnd, kMiddle, kMiddleEnd, kIsolated };

const char* VertexClassName(VertexClass c);

struct Topology {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
};

// Equal length, and equal either forwards or reversed.
bool SameEdge(std::span<const std::string> a, std::span<const std::string> b);

// Throws Error(kInvalidArgument) for edges shorter than 2, unknown vertices,
// or duplicate edges under SameEdge.
void ValidateTopology(const Topology& t);

std::map<std::string, VertexClass> ClassifyVertices(const Topology& t);

// All edges have the same number of vertices. Vacuously true without edges.
bool IsUniform(const Topology& t);

// Every two edges share a vertex.
bool SatisfiesCommonVertexCondition(const Topology& t);

// ---------------------------------------------------------------------------
// Knowledge semigraph.

enum class VertexRole { kTrainSarcastic, kTrainNonSarcastic, kTest };

const char* VertexRoleName(VertexRole role);
VertexRole ParseVertexRole(std::string_view name);
VertexRole TrainRole(ClassLabel label);
std::optional<ClassLabel> RoleClass(VertexRole role);

struct VertexId {
  std::string doc;
  FeatureKind kind;

  auto operator<=>(const VertexId&) const = default;
  bool operator==(const VertexId&) const = default;
};

// "doc#F3".
std::string FormatVertexId(const VertexId& id);
VertexId ParseVertexId(std::string_view text);

struct FeatureVertex {
  VertexId id;
  VertexRole role;
  PatternSet patterns;
  std::optional<double> weight;  // train vertices only

  bool operator==(const FeatureVertex&) const = default;
};

struct SemiEdge {
  std::vector<VertexId> vertices;

  bool operator==(const SemiEdge&) const = default;
};

struct GraphicalEdge {
  VertexId test;
  VertexId train;
  std::uint64_t matched = 0;
  double weight = 0.0;

  bool operator==(const GraphicalEdge&) const = default;
};

struct TrainingStats {
  CorpusTotals totals;
  ClassCounts counts;

  bool operator==(const TrainingStats&) const = default;
};

class Semigraph {
 public:
  using EdgeKey = std::pair<VertexId, VertexId>;  // (test, train)

  const std::map<VertexId, FeatureVertex>& vertices() const {
    return vertices_;
  }
  // Keyed by document id.
  const std::map<std::string, SemiEdge>& semiedges() const {
    return semiedges_;
  }
  const std::map<EdgeKey, GraphicalEdge>& graphical_edges() const {
    return edges_;
  }
  const TrainingStats& stats() const { return stats_; }
  const FeatureMask& mask() const { return mask_; }

  const FeatureVertex* FindVertex(const VertexId& id) const;
  bool HasDocument(std::string_view doc) const;
  std::optional<VertexRole> DocumentRole(std::string_view doc) const;
  std::vector<std::string> Documents(std::optional<VertexRole> role = {}) const;
  size_t test_document_count() const;

  // Integer numerator of a training vertex weight: the summed class counts
  // of its patterns. Throws Error(kUnknownVertex) for anything but a
  // training vertex.
  std::uint64_t WeightNumerator(const VertexId& id) const;

  // Graphical edges touching the vertex, in key order.
  std::vector<const GraphicalEdge*> IncidentEdges(const VertexId& id) const;

  // Flattened view for the generic semigraph predicates; graphical edges
  // appear as 2-tuples.
  Topology ToTopology() const;

  bool operator==(const Semigraph& other) const;

  // Assembles a graph from stored parts (used by the model loader). Verifies
  // referential integrity and that every stored weight matches its
  // recomputation.
  static Semigraph FromParts(FeatureMask mask, TrainingStats stats,
                             std::vector<FeatureVertex> vertices,
                             std::vector<SemiEdge> semiedges,
                             std::vector<GraphicalEdge> edges);

 private:
  friend Semigraph BuildTrainGraph(std::span<const LabeledDocument>,
                                   const ClassCounts&, const CorpusTotals&,
                                   const FeatureMask&);
  friend Semigraph AttachTestDocuments(Semigraph,
                                       std::span<const TaggedDocument>);
  friend void InsertTrainingDocuments(Semigraph&,
                                      std::span<const LabeledDocument>);

  void AddDocumentVertices(const std::string& doc, VertexRole role,
                           DocumentPatterns patterns);
  void RecomputeTrainWeights();
  void RefreshEdgeWeights();
  void LinkTestVertex(const FeatureVertex& test,
                      const std::set<std::string>* only_docs);
  void IndexTrainVertex(const FeatureVertex& v);

  FeatureMask mask_;
  TrainingStats stats_;
  std::map<VertexId, FeatureVertex> vertices_;
  std::map<std::string, SemiEdge> semiedges_;
  std::map<EdgeKey, GraphicalEdge> edges_;
  // Derived indexes, rebuilt on load.
  std::map<VertexId, std::set<EdgeKey>> incidence_;
  std::map<Pattern, std::vector<VertexId>> train_index_;
  std::map<VertexId, std::uint64_t> numerators_;
};

// One training document's vertices and semiedge per input document; no
// graphical edges. `counts` and `totals` must describe exactly `train`.
// Throws Error(kEmptyTrainingSet) or Error(kDuplicateDocument).
Semigraph BuildTrainGraph(std::span<const LabeledDocument> train,
                          const ClassCounts& counts, const CorpusTotals& totals,
                          const FeatureMask& mask = FeatureMask::All());

// Convenience: counts and totals computed from `train`.
Semigraph BuildTrainGraph(std::span<const LabeledDocument> train,
                          const FeatureMask& mask = FeatureMask::All());

// Adds weightless test vertices, a semiedge per test document, and graphical
// edges to every same-family training vertex with a non-empty pattern
// intersection. Test ids must not collide with ids already in the graph.
Semigraph AttachTestDocuments(Semigraph g,
                              std::span<const TaggedDocument> tests);

// Continuous learning: updates counts and totals, adds the new documents,
// recomputes every training weight, and links the new vertices to any test
// vertices already present. The result equals a fresh build over the enlarged
// corpus. Throws Error(kDuplicateDocument) naming every offending id, leaving
// the graph untouched.
void InsertTrainingDocuments(Semigraph& g,
                             std::span<const LabeledDocument> docs);
void InsertTrainingDocument(Semigraph& g, const TaggedDocument& doc,
                            ClassLabel label);

std::map<VertexId, VertexClass> ClassifyVertices(const Semigraph& g);
bool IsUniform(const Semigraph& g);

// Number of graphical edges at `v` whose other endpoint has role `filter`
// (any role when empty). Semiedges do not count. Throws Error(kUnknownVertex).
std::uint64_t Degree(const Semigraph& g, const VertexId& v,
                     std::optional<VertexRole> filter = {});

}  // namespace sarcasm

#endif  // SARCASM_SEMIGRAPH_H_
