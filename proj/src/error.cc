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

#include "sarcasm/error.h"

namespace sarcasm {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kIo:
      return "io";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kUnknownLabel:
      return "unknown-label";
    case ErrorCode::kEmptyAfterPreprocess:
      return "empty-after-preprocess";
    case ErrorCode::kDuplicateDocument:
      return "duplicate-document";
    case ErrorCode::kUnknownDocument:
      return "unknown-document";
    case ErrorCode::kUnknownVertex:
      return "unknown-vertex";
    case ErrorCode::kEmptyTrainingSet:
      return "empty-training-set";
    case ErrorCode::kMissingGold:
      return "missing-gold";
    case ErrorCode::kEmptyMatrix:
      return "empty-matrix";
    case ErrorCode::kUnsupportedVersion:
      return "unsupported-version";
  }
  return "unknown";
}

}  // namespace sarcasm
