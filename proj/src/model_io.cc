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

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sarcasm/error.h"

namespace sarcasm {
namespace {

using json = nlohmann::json;

json PatternItems(const Pattern& p) { return json(p.items); }

Pattern ReadPattern(FeatureKind kind, const json& j) {
  Pattern p{kind, j.get<std::vector<std::string>>()};
  if (static_cast<int>(p.items.size()) != PatternArity(kind)) {
    throw Error(ErrorCode::kParse, "pattern of wrong length for " + FeatureKindCode(kind));
  }
  return p;
}

json CountsJson(const ClassCounts& counts, ClassLabel label) {
  json out = json::object();
  for (FeatureKind kind : kAllFeatureKinds) {
    json rows = json::array();
    for (const auto& [p, n] : counts.table(kind, label)) {
      rows.push_back(json::array({PatternItems(p), n}));
    }
    out[FeatureKindCode(kind)] = std::move(rows);
  }
  return out;
}

void ReadCounts(const json& j, ClassLabel label, ClassCounts& counts) {
  for (const auto& [code, rows] : j.items()) {
    const FeatureKind kind = ParseFeatureKind(code);
    auto& table = counts.table(kind, label);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != 2) {
        throw Error(ErrorCode::kParse, "class count row must be [pattern, count]");
      }
      const auto n = row[1].get<std::uint64_t>();
      if (n == 0) throw Error(ErrorCode::kParse, "class count of zero");
      table[ReadPattern(kind, row[0])] = n;
    }
  }
}

Model FromJson(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "model is not a JSON object");
  const json& version = j.at("version");
  if (!version.is_number_integer()) {
    throw Error(ErrorCode::kParse, "model version must be an integer");
  }
  const auto v = version.get<long long>();
  if (v > kModelFormatVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "model format version " + std::to_string(v) +
                    " is newer than supported version " +
                    std::to_string(kModelFormatVersion));
  }
  if (v < 1) throw Error(ErrorCode::kParse, "bad model version " + std::to_string(v));

  Model model;
  FeatureMask mask;
  if (auto cfg = j.find("config"); cfg != j.end()) {
    for (const auto& code : cfg->value("disabled_features", json::array())) {
      mask.set(ParseFeatureKind(code.get<std::string>()), false);
    }
    model.tagger = cfg->value("tagger", std::string(kBuiltinTagger));
    model.tagger_suffixes = cfg->value("tagger_suffixes", std::string());
  }

  TrainingStats stats;
  for (const auto& [code, n] : j.at("totals").items()) {
    stats.totals[ParseFeatureKind(code)] = n.get<std::uint64_t>();
  }
  const json& counts = j.at("class_counts");
  for (ClassLabel label : kAllClasses) {
    if (auto it = counts.find(ClassLabelName(label)); it != counts.end()) {
      ReadCounts(*it, label, stats.counts);
    }
  }

  std::vector<FeatureVertex> vertices;
  for (const auto& jv : j.at("vertices")) {
    FeatureVertex fv;
    fv.id = VertexId{jv.at("doc").get<std::string>(),
                     ParseFeatureKind(jv.at("kind").get<std::string>())};
    if (jv.at("id").get<std::string>() != FormatVertexId(fv.id)) {
      throw Error(ErrorCode::kParse, "vertex id does not match doc/kind");
    }
    fv.role = ParseVertexRole(jv.at("role").get<std::string>());
    const json& w = jv.at("weight");
    if (!w.is_null()) fv.weight = ParseExactDouble(w.get<std::string>());
    for (const auto& p : jv.at("patterns")) {
      fv.patterns.insert(ReadPattern(fv.id.kind, p));
    }
    vertices.push_back(std::move(fv));
  }

  std::vector<SemiEdge> semiedges;
  for (const auto& je : j.at("semiedges")) {
    SemiEdge e;
    for (const auto& id : je) e.vertices.push_back(ParseVertexId(id.get<std::string>()));
    semiedges.push_back(std::move(e));
  }

  std::vector<GraphicalEdge> edges;
  for (const auto& je : j.at("graphical_edges")) {
    GraphicalEdge e;
    e.test = ParseVertexId(je.at("test").get<std::string>());
    e.train = ParseVertexId(je.at("train").get<std::string>());
    e.matched = je.at("matched").get<std::uint64_t>();
    e.weight = ParseExactDouble(je.at("weight").get<std::string>());
    edges.push_back(std::move(e));
  }

  model.graph = Semigraph::FromParts(mask, std::move(stats), std::move(vertices),
                                     std::move(semiedges), std::move(edges));
  return model;
}

}  // namespace

std::string FormatExactDouble(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

double ParseExactDouble(const std::string& text) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorCode::kParse, "bad decimal weight '" + text + "'");
  }
  return value;
}

std::string SerializeModel(const Model& model) {
  const Semigraph& g = model.graph;
  json j;
  j["version"] = kModelFormatVersion;

  json disabled = json::array();
  for (FeatureKind kind : kAllFeatureKinds) {
    if (!g.mask().enabled(kind)) disabled.push_back(FeatureKindCode(kind));
  }
  j["config"] = {{"disabled_features", disabled},
                 {"tagger", model.tagger},
                 {"tagger_suffixes", model.tagger_suffixes}};

  json totals = json::object();
  for (FeatureKind kind : kAllFeatureKinds) {
    totals[FeatureKindCode(kind)] = g.stats().totals[kind];
  }
  j["totals"] = std::move(totals);

  json counts = json::object();
  for (ClassLabel label : kAllClasses) {
    counts[ClassLabelName(label)] = CountsJson(g.stats().counts, label);
  }
  j["class_counts"] = std::move(counts);

  json vertices = json::array();
  for (const auto& [id, v] : g.vertices()) {
    json patterns = json::array();
    for (const Pattern& p : v.patterns) patterns.push_back(PatternItems(p));
    vertices.push_back({{"id", FormatVertexId(id)},
                        {"doc", id.doc},
                        {"kind", FeatureKindCode(id.kind)},
                        {"role", VertexRoleName(v.role)},
                        {"weight", v.weight ? json(FormatExactDouble(*v.weight)) : json()},
                        {"patterns", std::move(patterns)}});
  }
  j["vertices"] = std::move(vertices);

  json semiedges = json::array();
  for (const auto& [doc, e] : g.semiedges()) {
    json tuple = json::array();
    for (const auto& id : e.vertices) tuple.push_back(FormatVertexId(id));
    semiedges.push_back(std::move(tuple));
  }
  j["semiedges"] = std::move(semiedges);

  json edges = json::array();
  for (const auto& [key, e] : g.graphical_edges()) {
    edges.push_back({{"test", FormatVertexId(e.test)},
                     {"train", FormatVertexId(e.train)},
                     {"matched", e.matched},
                     {"weight", FormatExactDouble(e.weight)}});
  }
  j["graphical_edges"] = std::move(edges);

  return j.dump() + "\n";
}

Model DeserializeModel(const std::string& text) {
  try {
    return FromJson(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed model: ") + e.what());
  }
}

void SaveModel(const Model& model, const std::string& path) {
  const std::string text = SerializeModel(model);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write model '" + path + "'");
  out << text;
  if (!out.flush()) throw Error(ErrorCode::kIo, "failed writing model '" + path + "'");
}

Model LoadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open model '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return DeserializeModel(buf.str());
}

}  // namespace sarcasm
