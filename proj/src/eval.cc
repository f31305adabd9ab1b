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

#include "sarcasm/eval.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "sarcasm/error.h"

namespace sarcasm {
namespace {

double Ratio(std::uint64_t num, std::uint64_t den, bool& undefined) {
  undefined = den == 0;
  return undefined ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

ClassMetrics PositiveClassMetrics(const ConfusionMatrix& m) {
  ClassMetrics c;
  c.precision = Ratio(m.tp, m.tp + m.fp, c.precision_undefined);
  c.recall = Ratio(m.tp, m.tp + m.fn, c.recall_undefined);
  c.f_measure = FMeasure(c.precision, c.recall);
  return c;
}

std::string Fixed(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

nlohmann::ordered_json ClassJson(const ClassMetrics& c) {
  nlohmann::ordered_json j;
  j["precision"] = c.precision;
  j["recall"] = c.recall;
  j["f_measure"] = c.f_measure;
  j["precision_undefined"] = c.precision_undefined;
  j["recall_undefined"] = c.recall_undefined;
  return j;
}

}  // namespace

double FMeasure(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

void ConfusionMatrix::Add(ClassLabel predicted, ClassLabel gold) {
  const bool p = predicted == ClassLabel::kSarcastic;
  const bool g = gold == ClassLabel::kSarcastic;
  if (p && g) {
    ++tp;
  } else if (p) {
    ++fp;
  } else if (g) {
    ++fn;
  } else {
    ++tn;
  }
}

ConfusionMatrix Confusion(std::span<const PolarityResult> results,
                          const std::map<std::string, ClassLabel>& gold) {
  ConfusionMatrix m;
  for (const auto& r : results) {
    auto it = gold.find(r.doc);
    if (it == gold.end()) {
      throw Error(ErrorCode::kMissingGold, "no gold label for document '" + r.doc + "'");
    }
    m.Add(r.decision, it->second);
  }
  return m;
}

MetricsReport Metrics(const ConfusionMatrix& m) {
  const std::uint64_t total = m.total();
  if (total == 0) throw Error(ErrorCode::kEmptyMatrix, "confusion matrix is empty");
  MetricsReport r;
  r.matrix = m;
  r.sarcastic = PositiveClassMetrics(m);
  r.non_sarcastic = PositiveClassMetrics(m.Swapped());
  const std::uint64_t cells[4] = {m.tp, m.fp, m.fn, m.tn};
  for (int i = 0; i < 4; ++i) {
    r.matrix_pct[i] = 100.0 * static_cast<double>(cells[i]) / static_cast<double>(total);
  }
  return r;
}

std::string FormatReportText(const MetricsReport& r) {
  std::ostringstream os;
  char line[160];
  os << "class            precision  recall  f-measure\n";
  for (auto [name, c] : {std::pair{"sarcastic", &r.sarcastic},
                         std::pair{"non-sarcastic", &r.non_sarcastic}}) {
    std::snprintf(line, sizeof(line), "%-15s  %9s  %6s  %9s%s\n", name,
                  Fixed(c->precision, 4).c_str(), Fixed(c->recall, 4).c_str(),
                  Fixed(c->f_measure, 4).c_str(),
                  (c->precision_undefined || c->recall_undefined) ? "  (undefined denominator)"
                                                                  : "");
    os << line;
  }
  const auto& m = r.matrix;
  const auto& pct = r.matrix_pct;
  os << "\nconfusion matrix (rows: actual, columns: predicted)\n";
  std::snprintf(line, sizeof(line), "%-15s  %18s  %18s\n", "", "sarcastic", "non-sarcastic");
  os << line;
  auto cell = [&](std::uint64_t n, double p) {
    return std::to_string(n) + " (" + Fixed(p, 2) + " %)";
  };
  std::snprintf(line, sizeof(line), "%-15s  %18s  %18s\n", "sarcastic",
                cell(m.tp, pct[0]).c_str(), cell(m.fn, pct[2]).c_str());
  os << line;
  std::snprintf(line, sizeof(line), "%-15s  %18s  %18s\n", "non-sarcastic",
                cell(m.fp, pct[1]).c_str(), cell(m.tn, pct[3]).c_str());
  os << line;
  os << "\nsarcastic: precision " << Fixed(r.sarcastic.precision, 2) << ", recall "
     << Fixed(r.sarcastic.recall, 2) << ", f-measure " << Fixed(r.sarcastic.f_measure, 2)
     << "\n";
  return os.str();
}

std::string FormatReportJson(const MetricsReport& r) {
  nlohmann::ordered_json j;
  const auto& m = r.matrix;
  j["matrix"] = {{"tp", m.tp}, {"fp", m.fp}, {"fn", m.fn}, {"tn", m.tn}};
  j["matrix_pct"] = {{"tp", r.matrix_pct[0]},
                     {"fp", r.matrix_pct[1]},
                     {"fn", r.matrix_pct[2]},
                     {"tn", r.matrix_pct[3]}};
  j["per_class"] = {{"sarcastic", ClassJson(r.sarcastic)},
                    {"non_sarcastic", ClassJson(r.non_sarcastic)}};
  j["headline"] = {{"precision", r.sarcastic.precision},
                   {"recall", r.sarcastic.recall},
                   {"f_measure", r.sarcastic.f_measure}};
  return j.dump(2);
}

std::string ReportCsvHeader() {
  return "run,precision,recall,f_measure,tp,fp,fn,tn";
}

std::string FormatReportCsv(const MetricsReport& r, const std::string& run_name) {
  const auto& m = r.matrix;
  return run_name + "," + Fixed(r.sarcastic.precision, 6) + "," +
         Fixed(r.sarcastic.recall, 6) + "," + Fixed(r.sarcastic.f_measure, 6) + "," +
         std::to_string(m.tp) + "," + std::to_string(m.fp) + "," +
         std::to_string(m.fn) + "," + std::to_string(m.tn);
}

}  // namespace sarcasm
