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

#include <memory>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sarcasm/corpus.h"
#include "sarcasm/error.h"
#include "sarcasm/eval.h"
#include "sarcasm/features.h"
#include "sarcasm/model_io.h"
#include "sarcasm/pipeline.h"
#include "sarcasm/semigraph.h"
#include "sarcasm/tagger.h"

namespace py = pybind11;

namespace sarcasm {
namespace {

std::shared_ptr<LexiconTagger> SharedTagger(const std::string& spec,
                                            const std::string& suffixes) {
  return std::shared_ptr<LexiconTagger>(LoadTagger(spec, suffixes));
}

FeatureMask MaskWithout(const std::vector<std::string>& disabled) {
  FeatureMask mask;
  for (const auto& code : disabled) mask.set(ParseFeatureKind(code), false);
  return mask;
}

// A trained model together with the tagger it was built with.
class PyModel {
 public:
  PyModel(Model model, std::shared_ptr<LexiconTagger> tagger)
      : model_(std::move(model)), tagger_(std::move(tagger)) {}

  static PyModel Train(const std::vector<Document>& docs,
                       const std::vector<std::string>& disabled,
                       const std::string& tagger, const std::string& suffixes) {
    RunConfig config;
    config.features = MaskWithout(disabled);
    config.tagger = tagger;
    config.tagger_suffixes = suffixes;
    auto t = SharedTagger(tagger, suffixes);
    return PyModel(TrainModel(docs, config, *t), t);
  }

  static PyModel FromModel(Model model) {
    auto t = SharedTagger(model.tagger, model.tagger_suffixes);
    return PyModel(std::move(model), std::move(t));
  }

  std::vector<PolarityResult> Classify(const std::vector<Document>& docs) const {
    return ClassifyDocuments(model_, docs, *tagger_);
  }
  std::vector<std::string> Add(const std::vector<Document>& docs) {
    std::vector<std::string> rejected;
    AddToModel(model_, docs, *tagger_, &rejected);
    return rejected;
  }

  const Model& model() const { return model_; }

 private:
  Model model_;
  std::shared_ptr<LexiconTagger> tagger_;
};

py::dict PatternsDict(const DocumentPatterns& sets) {
  py::dict out;
  for (FeatureKind kind : kAllFeatureKinds) {
    py::list items;
    for (const Pattern& p : sets[Index(kind)]) {
      items.append(py::tuple(py::cast(p.items)));
    }
    out[py::str(FeatureKindCode(kind))] = items;
  }
  return out;
}

}  // namespace
}  // namespace sarcasm

PYBIND11_MODULE(_core, m) {
  using namespace sarcasm;
  m.doc() = "Sarcasm detection with weighted semigraphs";

  static py::exception<Error> error(m, "SarcasmError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error((std::string(ErrorCodeName(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::enum_<ClassLabel>(m, "ClassLabel")
      .value("SARCASTIC", ClassLabel::kSarcastic)
      .value("NON_SARCASTIC", ClassLabel::kNonSarcastic);

  py::class_<Document>(m, "Document")
      .def(py::init([](std::string id, std::string text, std::optional<ClassLabel> label,
                       std::optional<int> rating) {
             return Document{std::move(id), std::move(text), label, rating};
           }),
           py::arg("id"), py::arg("text"), py::arg("label") = py::none(),
           py::arg("rating") = py::none())
      .def_readwrite("id", &Document::id)
      .def_readwrite("text", &Document::text)
      .def_readwrite("label", &Document::label)
      .def_readwrite("rating", &Document::rating)
      .def("__repr__", [](const Document& d) { return "<Document " + d.id + ">"; });

  m.def("load_corpus",
        [](const std::string& path, const std::string& format) {
          LoadOptions options;
          options.format = ParseCorpusFormat(format);
          return LoadCorpus(path, options);
        },
        py::arg("path"), py::arg("format") = "auto");

  m.def("preprocess",
        [](const Document& doc) {
          TokenizedDocument t = Preprocess(doc);
          return py::make_tuple(t.tokens, t.punct_tokens);
        },
        "Returns (word tokens, punctuation tokens).");

  m.def("stratified_split",
        [](const std::vector<Document>& docs, double fraction, std::uint64_t seed) {
          Split s = StratifiedSplit(docs, fraction, seed);
          return py::make_tuple(s.train, s.test);
        },
        py::arg("docs"), py::arg("test_fraction") = 0.2, py::arg("seed") = 42);

  py::class_<LexiconTagger, std::shared_ptr<LexiconTagger>>(m, "Tagger")
      .def(py::init(&SharedTagger), py::arg("spec") = "builtin", py::arg("suffixes") = "")
      .def("tag_word", [](const LexiconTagger& t, const std::string& w) {
        return std::string(PosTagName(t.TagWord(w)));
      })
      .def("tag",
           [](const LexiconTagger& t, const Document& doc) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [w, tag] : t.Tag(Preprocess(doc)).tagged) {
               out.emplace_back(w, PosTagName(tag));
             }
             return out;
           })
      .def("extract_patterns",
           [](const LexiconTagger& t, const Document& doc) {
             return PatternsDict(ExtractPatterns(t.Tag(Preprocess(doc))));
           })
      .def_property_readonly("lexicon_size", &LexiconTagger::lexicon_size);

  py::class_<PolarityResult>(m, "PolarityResult")
      .def_readonly("doc", &PolarityResult::doc)
      .def_readonly("sarcastic_score", &PolarityResult::sarcastic_score)
      .def_readonly("non_sarcastic_score", &PolarityResult::non_sarcastic_score)
      .def_readonly("normalized", &PolarityResult::normalized)
      .def_readonly("decision", &PolarityResult::decision)
      .def_readonly("evidence_edges", &PolarityResult::evidence_edges)
      .def_readonly("no_evidence", &PolarityResult::no_evidence)
      .def("to_line", &FormatResultLine)
      .def("to_json", &FormatResultJson);

  py::class_<ClassMetrics>(m, "ClassMetrics")
      .def_readonly("precision", &ClassMetrics::precision)
      .def_readonly("recall", &ClassMetrics::recall)
      .def_readonly("f_measure", &ClassMetrics::f_measure);

  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("sarcastic", &MetricsReport::sarcastic)
      .def_readonly("non_sarcastic", &MetricsReport::non_sarcastic)
      .def_property_readonly("matrix",
                             [](const MetricsReport& r) {
                               const auto& c = r.matrix;
                               return py::dict(py::arg("tp") = c.tp, py::arg("fp") = c.fp,
                                               py::arg("fn") = c.fn, py::arg("tn") = c.tn);
                             })
      .def_readonly("matrix_pct", &MetricsReport::matrix_pct)
      .def("to_json", &FormatReportJson)
      .def("__str__", &FormatReportText);

  m.def("metrics",
        [](std::uint64_t tp, std::uint64_t fp, std::uint64_t fn, std::uint64_t tn) {
          return Metrics(ConfusionMatrix{tp, fp, fn, tn});
        },
        py::arg("tp"), py::arg("fp"), py::arg("fn"), py::arg("tn"));

  py::class_<PyModel>(m, "Model")
      .def_static("train", &PyModel::Train, py::arg("docs"),
                  py::arg("disabled_features") = std::vector<std::string>{},
                  py::arg("tagger") = "builtin", py::arg("tagger_suffixes") = "")
      .def_static("load", [](const std::string& path) { return PyModel::FromModel(LoadModel(path)); })
      .def_static("from_json",
                  [](const std::string& text) { return PyModel::FromModel(DeserializeModel(text)); })
      .def("save", [](const PyModel& p, const std::string& path) { SaveModel(p.model(), path); })
      .def("to_json", [](const PyModel& p) { return SerializeModel(p.model()); })
      .def("classify", &PyModel::Classify)
      .def("add", &PyModel::Add, "Inserts documents; returns ids rejected as empty.")
      .def_property_readonly("num_documents",
                             [](const PyModel& p) { return p.model().graph.Documents().size(); })
      .def_property_readonly("num_vertices",
                             [](const PyModel& p) { return p.model().graph.vertices().size(); })
      .def_property_readonly("num_semiedges",
                             [](const PyModel& p) { return p.model().graph.semiedges().size(); })
      .def_property_readonly("totals", [](const PyModel& p) {
        py::dict out;
        for (FeatureKind kind : kAllFeatureKinds) {
          out[py::str(FeatureKindCode(kind))] = p.model().graph.stats().totals[kind];
        }
        return out;
      })
      .def("__eq__", [](const PyModel& a, const PyModel& b) { return a.model() == b.model(); });

  m.def("evaluate",
        [](const std::vector<Document>& train, const std::vector<Document>& test,
           const std::vector<std::string>& disabled, const std::string& tagger) {
          RunConfig config;
          config.features = MaskWithout(disabled);
          config.tagger = tagger;
          auto t = LoadTagger(tagger);
          return EvaluateRun(train, test, config, *t).report;
        },
        py::arg("train"), py::arg("test"),
        py::arg("disabled_features") = std::vector<std::string>{},
        py::arg("tagger") = "builtin");

  m.def("classify_vertices",
        [](const std::vector<std::string>& vertices,
           const std::vector<std::vector<std::string>>& edges) {
          Topology t{vertices, edges};
          ValidateTopology(t);
          std::map<std::string, std::string> out;
          for (const auto& [v, c] : ClassifyVertices(t)) out[v] = VertexClassName(c);
          return out;
        },
        py::arg("vertices"), py::arg("edges"));

  m.def("is_uniform",
        [](const std::vector<std::vector<std::string>>& edges) {
          return IsUniform(Topology{{}, edges});
        },
        py::arg("edges"));

  m.attr("__version__") = "0.1.0";
}
