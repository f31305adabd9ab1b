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

#ifndef SARCASM_EVAL_H_
#define SARCASM_EVAL_H_

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "sarcasm/corpus.h"
#include "sarcasm/polarity.h"

namespace sarcasm {

// Sarcastic is the positive class.
struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const { return tp + fp + fn + tn; }
  void Add(ClassLabel predicted, ClassLabel gold);
  // Same counts seen with NonSarcastic as the positive class.
  ConfusionMatrix Swapped() const { return {tn, fn, fp, tp}; }

  bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix Confusion(std::span<const PolarityResult> results,
                          const std::map<std::string, ClassLabel>& gold);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  bool precision_undefined = false;  // no predictions of the class
  bool recall_undefined = false;     // no gold documents of the class
};

struct MetricsReport {
  ClassMetrics sarcastic;
  ClassMetrics non_sarcastic;
  ConfusionMatrix matrix;
  // 100 * cell / total, in tp, fp, fn, tn order.
  std::array<double, 4> matrix_pct{};

  const ClassMetrics& headline() const { return sarcastic; }
};

// Harmonic mean 2PR/(P+R); 0 when P+R is 0.
double FMeasure(double precision, double recall);

// Throws Error(kEmptyMatrix) when the matrix has no documents.
MetricsReport Metrics(const ConfusionMatrix& m);

std::string FormatReportText(const MetricsReport& r);
std::string FormatReportJson(const MetricsReport& r);
std::string ReportCsvHeader();
std::string FormatReportCsv(const MetricsReport& r, const std::string& run_name);

}  // namespace sarcasm

#endif  // SARCASM_EVAL_H_
