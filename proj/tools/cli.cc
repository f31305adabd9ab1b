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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "sarcasm/corpus.h"
#include "sarcasm/error.h"
#include "sarcasm/eval.h"
#include "sarcasm/model_io.h"
#include "sarcasm/pipeline.h"
#include "sarcasm/semigraph.h"
#include "sarcasm/tagger.h"

namespace sarcasm {
namespace cli {
namespace {

using json = nlohmann::json;

enum class OutputFormat { kTsv, kJsonLines };

// Values gathered from flags; unset optionals fall back to the config file
// and then to RunConfig defaults.
struct Flags {
  std::string corpus;
  std::string model;
  std::string input;
  std::string out;
  std::string json_path;
  std::string csv_path;
  std::string dump_weights;
  std::string config_path;
  std::optional<std::string> format;
  std::optional<double> test_fraction;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> disabled;
  std::optional<std::string> tagger;
  std::optional<std::string> tagger_suffixes;
  std::optional<std::string> output;
  bool use_resolved_text = false;
};

struct Settings {
  RunConfig run;
  CorpusFormat format = CorpusFormat::kAuto;
  OutputFormat output = OutputFormat::kTsv;
};

void ConfigureLogging() {
  auto logger = spdlog::get("semigraph");
  if (!logger) logger = spdlog::stderr_logger_st("semigraph");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* level = std::getenv("SEMIGRAPH_LOG");
  const std::string name = level ? level : "info";
  if (name == "error") {
    spdlog::set_level(spdlog::level::err);
  } else if (name == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else {
    if (name != "info") spdlog::warn("unknown SEMIGRAPH_LOG level '{}'", name);
    spdlog::set_level(spdlog::level::info);
  }
}

OutputFormat ParseOutputFormat(const std::string& name) {
  if (name == "tsv") return OutputFormat::kTsv;
  if (name == "jsonl" || name == "json") return OutputFormat::kJsonLines;
  throw Error(ErrorCode::kInvalidArgument, "unknown output format '" + name + "'");
}

// Flags > config file > defaults.
Settings Resolve(const Flags& flags) {
  Settings s;
  json cfg = json::object();
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw Error(ErrorCode::kIo, "cannot open config '" + flags.config_path + "'");
    try {
      cfg = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, "config '" + flags.config_path + "': " + e.what());
    }
    if (!cfg.is_object()) throw Error(ErrorCode::kParse, "config must be a JSON object");
  }
  try {
    s.run.test_fraction = flags.test_fraction.value_or(cfg.value("test_fraction", 0.2));
    s.run.seed = flags.seed.value_or(cfg.value("seed", std::uint64_t{42}));
    s.run.tagger = flags.tagger.value_or(cfg.value("tagger", std::string(kBuiltinTagger)));
    s.run.tagger_suffixes =
        flags.tagger_suffixes.value_or(cfg.value("tagger_suffixes", std::string()));
    s.format = ParseCorpusFormat(flags.format.value_or(cfg.value("format", std::string("auto"))));
    s.output = ParseOutputFormat(flags.output.value_or(cfg.value("output", std::string("tsv"))));
    std::vector<std::string> disabled = flags.disabled;
    if (disabled.empty()) {
      disabled = cfg.value("disabled_features", std::vector<std::string>{});
    }
    for (const auto& code : disabled) s.run.features.set(ParseFeatureKind(code), false);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("config: ") + e.what());
  }
  if (s.run.features.count() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "every feature family is disabled");
  }
  return s;
}

std::vector<Document> ReadCorpus(const std::string& path, const Settings& s,
                                 bool use_resolved,
                                 std::vector<std::string>* record_errors = nullptr) {
  LoadOptions options;
  options.format = s.format;
  options.use_resolved_text = use_resolved;
  options.record_errors = record_errors;
  auto docs = LoadCorpus(path, options);
  spdlog::debug("loaded {} documents from {}", docs.size(), path);
  return docs;
}

void WarnRejected(const std::vector<std::string>& rejected) {
  for (const auto& id : rejected) {
    spdlog::warn("document {} is empty after preprocessing; not used for training", id);
  }
}

// Writes to `path`, or to `fallback` when the path is empty or "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
}

void PrintGraphStats(const Semigraph& g, std::ostream& out) {
  out << "documents: " << g.Documents().size() << " ("
      << g.Documents(VertexRole::kTrainSarcastic).size() << " sarcastic, "
      << g.Documents(VertexRole::kTrainNonSarcastic).size() << " non-sarcastic, "
      << g.test_document_count() << " test)\n";
  out << "vertices: " << g.vertices().size() << "\n";
  out << "semiedges: " << g.semiedges().size() << "\n";
  out << "graphical edges: " << g.graphical_edges().size() << "\n";
  out << "totals:";
  for (FeatureKind kind : kAllFeatureKinds) {
    out << " " << FeatureKindCode(kind) << "=" << g.stats().totals[kind];
  }
  out << "\n";
}

int CmdTrain(const Flags& flags, std::ostream& out) {
  const Settings s = Resolve(flags);
  const auto tagger = LoadTagger(s.run.tagger, s.run.tagger_suffixes);
  const auto docs = ReadCorpus(flags.corpus, s, flags.use_resolved_text);
  std::vector<std::string> rejected;
  const Model model = TrainModel(docs, s.run, *tagger, &rejected);
  WarnRejected(rejected);
  SaveModel(model, flags.model);

  if (!flags.dump_weights.empty()) {
    std::vector<FeatureWeight> weights;
    for (const auto& [id, v] : model.graph.vertices()) {
      weights.push_back(FeatureWeight{id.kind, id.doc, *RoleClass(v.role), *v.weight, false,
                                      model.graph.WeightNumerator(id)});
    }
    std::ofstream dump(flags.dump_weights, std::ios::binary | std::ios::trunc);
    if (!dump) throw Error(ErrorCode::kIo, "cannot write '" + flags.dump_weights + "'");
    WriteWeightDump(dump, weights);
  }
  PrintGraphStats(model.graph, out);
  out << "model written to " << flags.model << "\n";
  return kExitOk;
}

int CmdClassify(const Flags& flags, std::ostream& out) {
  Settings s = Resolve(flags);
  const Model model = LoadModel(flags.model);
  if (!flags.tagger) {
    s.run.tagger = model.tagger;
    s.run.tagger_suffixes = model.tagger_suffixes;
  }
  const auto tagger = LoadTagger(s.run.tagger, s.run.tagger_suffixes);
  std::vector<std::string> record_errors;
  const auto docs = ReadCorpus(flags.input, s, flags.use_resolved_text, &record_errors);
  for (const auto& e : record_errors) spdlog::error("{}: {}", flags.input, e);

  const auto results = ClassifyDocuments(model, docs, *tagger);
  Sink sink(flags.out, out);
  for (const auto& r : results) {
    sink.get() << (s.output == OutputFormat::kTsv ? FormatResultLine(r)
                                                   : FormatResultJson(r))
               << "\n";
    if (r.no_evidence) spdlog::debug("{}: no evidence, defaulted to non-sarcastic", r.doc);
  }
  return record_errors.empty() ? kExitOk : kExitRecordFailures;
}

int CmdAdd(const Flags& flags, std::ostream& out) {
  Settings s = Resolve(flags);
  Model model = LoadModel(flags.model);
  const auto tagger = LoadTagger(model.tagger, model.tagger_suffixes);
  const auto docs = ReadCorpus(flags.corpus, s, flags.use_resolved_text);
  std::vector<std::string> rejected;
  AddToModel(model, docs, *tagger, &rejected);
  WarnRejected(rejected);
  const std::string target = flags.out.empty() ? flags.model : flags.out;
  SaveModel(model, target);
  out << "added " << docs.size() - rejected.size() << " document(s)\n";
  PrintGraphStats(model.graph, out);
  return kExitOk;
}

int CmdEval(const Flags& flags, std::ostream& out) {
  const Settings s = Resolve(flags);
  const auto tagger = LoadTagger(s.run.tagger, s.run.tagger_suffixes);
  const auto docs = ReadCorpus(flags.corpus, s, flags.use_resolved_text);
  const Split split = StratifiedSplit(docs, s.run.test_fraction, s.run.seed);
  const EvaluationRun run = EvaluateRun(split.train, split.test, s.run, *tagger);
  WarnRejected(run.rejected);

  out << "train documents: " << run.train_documents
      << ", test documents: " << run.test_documents << " (seed " << s.run.seed
      << ", test fraction " << s.run.test_fraction << ")\n\n";
  out << FormatReportText(run.report);
  if (!flags.json_path.empty()) WriteTextFile(flags.json_path, FormatReportJson(run.report) + "\n");
  if (!flags.csv_path.empty()) {
    WriteTextFile(flags.csv_path, ReportCsvHeader() + "\n" +
                                      FormatReportCsv(run.report, flags.corpus) + "\n");
  }
  return kExitOk;
}

int CmdInspect(const Flags& flags, std::ostream& out) {
  const Model model = LoadModel(flags.model);
  const Semigraph& g = model.graph;

  std::map<std::pair<VertexRole, FeatureKind>, size_t> by_role_kind;
  std::map<std::uint64_t, size_t> degree_histogram;
  for (const auto& [id, v] : g.vertices()) {
    ++by_role_kind[{v.role, id.kind}];
    ++degree_histogram[Degree(g, id)];
  }
  std::map<VertexClass, size_t> classes;
  for (const auto& [id, c] : ClassifyVertices(g)) ++classes[c];
  const Topology topology = g.ToTopology();
  const bool uniform = IsUniform(topology);
  const bool common_vertex = SatisfiesCommonVertexCondition(topology);

  json report;
  report["tagger"] = model.tagger;
  report["documents"] = g.Documents().size();
  report["vertices"] = g.vertices().size();
  report["semiedges"] = g.semiedges().size();
  report["graphical_edges"] = g.graphical_edges().size();
  json counts = json::object();
  for (const auto& [key, n] : by_role_kind) {
    counts[VertexRoleName(key.first)][FeatureKindCode(key.second)] = n;
  }
  report["vertices_by_role"] = counts;
  json hist = json::object();
  for (const auto& [d, n] : degree_histogram) hist[std::to_string(d)] = n;
  report["degree_histogram"] = hist;
  json cls = json::object();
  for (const auto& [c, n] : classes) cls[VertexClassName(c)] = n;
  report["vertex_classes"] = cls;
  report["uniform"] = uniform;
  report["common_vertex_condition"] = common_vertex;

  PrintGraphStats(g, out);
  out << "vertices by role and family:\n";
  for (const auto& [key, n] : by_role_kind) {
    out << "  " << VertexRoleName(key.first) << " " << FeatureKindCode(key.second) << ": "
        << n << "\n";
  }
  out << "graphical degree histogram:";
  for (const auto& [d, n] : degree_histogram) out << " " << d << ":" << n;
  out << "\nvertex classes:";
  for (const auto& [c, n] : classes) out << " " << VertexClassName(c) << "=" << n;
  out << "\nuniform: " << (uniform ? "yes" : "no") << "\n";
  out << "every two edges share a vertex: " << (common_vertex ? "yes" : "no")
      << " (informational)\n";
  if (!flags.json_path.empty()) WriteTextFile(flags.json_path, report.dump(2) + "\n");
  return kExitOk;
}

void AddRunOptions(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "Corpus format: a (TSV) or b (JSON lines)")
      ->check(CLI::IsMember({"a", "b", "auto", "tsv", "json", "jsonl"}));
  cmd->add_option("--disable-feature", f.disabled, "Disable a feature family (F1..F7)")
      ->take_all();
  cmd->add_option("--tagger", f.tagger, "POS tagger: builtin or a lexicon file");
  cmd->add_option("--tagger-suffixes", f.tagger_suffixes,
                  "Suffix rule file for a lexicon tagger");
  cmd->add_option("--config", f.config_path, "JSON config file");
  cmd->add_flag("--use-resolved-text", f.use_resolved_text,
                "Use the resolved_text field of JSON records");
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ConfigureLogging();
  Flags f;
  CLI::App app{"Sarcasm detection with weighted semigraphs", "semigraph"};
  app.require_subcommand(1);

  auto* train = app.add_subcommand("train", "Build a model from a labeled corpus");
  train->add_option("--corpus", f.corpus, "Labeled corpus")->required();
  train->add_option("--model", f.model, "Model file to write")->required();
  train->add_option("--dump-weights", f.dump_weights, "Write per-vertex weights (TSV)");
  AddRunOptions(train, f);

  auto* classify = app.add_subcommand("classify", "Score documents against a model");
  classify->add_option("--model", f.model, "Model file")->required();
  classify->add_option("--input", f.input, "Documents to classify")->required();
  classify->add_option("--out", f.out, "Result file (default: stdout)");
  classify->add_option("--output", f.output, "Result format: tsv or jsonl")
      ->check(CLI::IsMember({"tsv", "jsonl", "json"}));
  AddRunOptions(classify, f);

  auto* add = app.add_subcommand("add", "Insert labeled documents into a model");
  add->add_option("--model", f.model, "Model file")->required();
  add->add_option("--corpus", f.corpus, "Labeled documents to insert")->required();
  add->add_option("--out", f.out, "Updated model path (default: overwrite --model)");
  AddRunOptions(add, f);

  auto* eval = app.add_subcommand("eval", "Split, train, classify and report metrics");
  eval->add_option("--corpus", f.corpus, "Labeled corpus")->required();
  eval->add_option("--test-fraction", f.test_fraction, "Held-out fraction in (0,1)");
  eval->add_option("--seed", f.seed, "Split seed");
  eval->add_option("--json", f.json_path, "Also write the report as JSON");
  eval->add_option("--csv", f.csv_path, "Also write a CSV summary row");
  AddRunOptions(eval, f);

  auto* inspect = app.add_subcommand("inspect", "Print model statistics");
  inspect->add_option("--model", f.model, "Model file")->required();
  inspect->add_option("--json", f.json_path, "Also write statistics as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFatal;
  }

  try {
    if (*train) return CmdTrain(f, out);
    if (*classify) return CmdClassify(f, out);
    if (*add) return CmdAdd(f, out);
    if (*eval) return CmdEval(f, out);
    if (*inspect) return CmdInspect(f, out);
  } catch (const Error& e) {
    err << "semigraph: " << e.what() << "\n";
    return kExitFatal;
  } catch (const std::exception& e) {
    err << "semigraph: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitFatal;
}

}  // namespace cli
}  // namespace sarcasm
