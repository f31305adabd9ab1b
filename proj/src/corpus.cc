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

#include "sarcasm/corpus.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"
#include "sarcasm/error.h"

namespace sarcasm {
namespace {

using json = nlohmann::json;

std::string LineError(size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

std::string Trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<ClassLabel> CorpusLabel(const std::string& raw, size_t line) {
  const std::string label = Lower(Trim(raw));
  if (label.empty() || label == "-") return std::nullopt;
  if (label == "ironic") return ClassLabel::kSarcastic;
  if (label == "regular") return ClassLabel::kNonSarcastic;
  throw Error(ErrorCode::kUnknownLabel,
              LineError(line, "unknown label '" + raw + "'"));
}

std::optional<int> CorpusRating(const std::string& raw, size_t line) {
  const std::string text = Trim(raw);
  if (text.empty() || text == "-") return std::nullopt;
  if (text.size() != 1 || text[0] < '1' || text[0] > '5') {
    throw Error(ErrorCode::kParse,
                LineError(line, "rating must be 1..5 or '-', got '" + raw + "'"));
  }
  return text[0] - '0';
}

std::string JoinTitle(const std::string& title, const std::string& body) {
  if (title.empty()) return body;
  if (body.empty()) return title;
  return title + "\n" + body;
}

Document ParseTsvRecord(const std::string& line_text, size_t line,
                        const std::string& id) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line_text.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line_text.substr(start));
      break;
    }
    fields.push_back(line_text.substr(start, tab - start));
    start = tab + 1;
  }
  if (fields.size() != 4) {
    throw Error(ErrorCode::kParse,
                LineError(line, "expected 4 tab-separated fields, got " +
                                    std::to_string(fields.size())));
  }
  Document doc;
  doc.id = id;
  doc.label = CorpusLabel(fields[0], line);
  doc.rating = CorpusRating(fields[1], line);
  doc.text = JoinTitle(fields[2], fields[3]);
  return doc;
}

std::string OptionalString(const json& obj, const char* key, size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw Error(ErrorCode::kParse,
                LineError(line, std::string("'") + key + "' must be a string"));
  }
  return it->get<std::string>();
}

Document ParseJsonRecord(const std::string& line_text, size_t line,
                         const std::string& id, bool use_resolved) {
  json obj;
  try {
    obj = json::parse(line_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, LineError(line, e.what()));
  }
  if (!obj.is_object()) {
    throw Error(ErrorCode::kParse, LineError(line, "record is not an object"));
  }
  if (!obj.contains("text")) {
    throw Error(ErrorCode::kParse, LineError(line, "missing 'text'"));
  }
  Document doc;
  doc.id = OptionalString(obj, "id", line);
  if (doc.id.empty()) doc.id = id;
  doc.label = CorpusLabel(OptionalString(obj, "label", line), line);

  auto rating = obj.find("rating");
  if (rating != obj.end() && !rating->is_null()) {
    if (rating->is_number_integer()) {
      doc.rating = CorpusRating(std::to_string(rating->get<long long>()), line);
    } else if (rating->is_string()) {
      doc.rating = CorpusRating(rating->get<std::string>(), line);
    } else {
      throw Error(ErrorCode::kParse, LineError(line, "bad 'rating'"));
    }
  }

  std::string body = OptionalString(obj, "text", line);
  if (use_resolved) {
    std::string resolved = OptionalString(obj, "resolved_text", line);
    if (!resolved.empty()) body = std::move(resolved);
  }
  doc.text = JoinTitle(OptionalString(obj, "title", line), body);
  return doc;
}

// Decodes one UTF-8 sequence starting at s[i]; returns the code point and
// advances i. Malformed bytes decode to U+FFFD and consume one byte.
char32_t NextCodePoint(std::string_view s, size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + len > s.size()) {
    ++i;
    return 0xFFFD;
  }
  for (int k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += len;
  return cp;
}

void AppendUtf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool IsWordChar(char32_t cp) {
  if (cp < 0x80) return std::isalnum(static_cast<int>(cp)) != 0;
  // Latin-1 supplement and Latin extended letters.
  return cp >= 0xC0 && cp <= 0x24F && cp != 0xD7 && cp != 0xF7;
}

char32_t LowerWordChar(char32_t cp) {
  if (cp < 0x80) return static_cast<char32_t>(std::tolower(static_cast<int>(cp)));
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

// Typographic quotes fold onto their ASCII marks; 0 for anything else
// outside the pragmatic set.
char PragmaticMark(char32_t cp) {
  if (cp < 0x80 && kPragmaticMarks.find(static_cast<char>(cp)) !=
                       std::string_view::npos) {
    return static_cast<char>(cp);
  }
  switch (cp) {
    case 0x2018:
    case 0x2019:
      return '\'';
    case 0x201C:
    case 0x201D:
      return '"';
    default:
      return 0;
  }
}

std::uint64_t BoundedDraw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

const char* ClassLabelName(ClassLabel label) {
  return label == ClassLabel::kSarcastic ? "sarcastic" : "non-sarcastic";
}

ClassLabel ParseClassLabel(std::string_view name) {
  const std::string n = Lower(Trim(name));
  if (n == "sarcastic" || n == "ironic" || n == "s") return ClassLabel::kSarcastic;
  if (n == "non-sarcastic" || n == "regular" || n == "n") {
    return ClassLabel::kNonSarcastic;
  }
  throw Error(ErrorCode::kUnknownLabel, "unknown label '" + std::string(name) + "'");
}

ClassLabel OtherClass(ClassLabel label) {
  return label == ClassLabel::kSarcastic ? ClassLabel::kNonSarcastic
                                         : ClassLabel::kSarcastic;
}

CorpusFormat ParseCorpusFormat(std::string_view name) {
  const std::string n = Lower(name);
  if (n == "a" || n == "tsv") return CorpusFormat::kTsv;
  if (n == "b" || n == "json" || n == "jsonl") return CorpusFormat::kJson;
  if (n == "auto") return CorpusFormat::kAuto;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown corpus format '" + std::string(name) + "'");
}

std::vector<Document> ParseCorpus(std::istream& in, const LoadOptions& options) {
  std::vector<Document> docs;
  CorpusFormat format = options.format;
  const std::string prefix = options.id_prefix.empty() ? "doc" : options.id_prefix;
  std::string line_text;
  size_t line = 0;
  while (std::getline(in, line_text)) {
    ++line;
    if (!line_text.empty() && line_text.back() == '\r') line_text.pop_back();
    const std::string trimmed = Trim(line_text);
    if (trimmed.empty()) continue;
    if (format == CorpusFormat::kAuto) {
      format = trimmed.front() == '{' ? CorpusFormat::kJson : CorpusFormat::kTsv;
    }
    const std::string id = prefix + ":" + std::to_string(line);
    try {
      if (format == CorpusFormat::kJson) {
        docs.push_back(ParseJsonRecord(line_text, line, id, options.use_resolved_text));
      } else {
        docs.push_back(ParseTsvRecord(line_text, line, id));
      }
    } catch (const Error& e) {
      if (!options.record_errors) throw;
      options.record_errors->push_back(e.what());
    }
  }
  return docs;
}

std::vector<Document> LoadCorpus(const std::string& path, LoadOptions options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open corpus '" + path + "'");
  if (options.id_prefix.empty()) {
    options.id_prefix = std::filesystem::path(path).stem().string();
  }
  return ParseCorpus(in, options);
}

TokenizedDocument Preprocess(const Document& doc) {
  TokenizedDocument out;
  out.id = doc.id;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) out.tokens.push_back(std::move(word));
    word.clear();
  };

  const std::string_view text = doc.text;
  size_t i = 0;
  while (i < text.size()) {
    const char32_t cp = NextCodePoint(text, i);
    if (IsWordChar(cp)) {
      AppendUtf8(word, LowerWordChar(cp));
      continue;
    }
    const char mark = PragmaticMark(cp);
    if (mark == 0) {
      // Whitespace and special symbols both separate words.
      flush();
      continue;
    }
    out.punct_tokens.emplace_back(1, mark);
    if (mark == '\'' && !word.empty() && i < text.size()) {
      // An apostrophe inside a word ("don't") is counted but does not split.
      size_t peek = i;
      if (IsWordChar(NextCodePoint(text, peek))) continue;
    }
    flush();
  }
  flush();

  if (out.tokens.empty()) {
    throw Error(ErrorCode::kEmptyAfterPreprocess,
                "empty-after-preprocess: document '" + doc.id + "'");
  }
  return out;
}

Split StratifiedSplit(std::span<const Document> docs, double test_fraction,
                      std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "test fraction must lie in (0, 1), got " +
                    std::to_string(test_fraction));
  }
  std::vector<size_t> by_class[2];
  for (size_t i = 0; i < docs.size(); ++i) {
    if (!docs[i].label) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot stratify unlabeled document '" + docs[i].id + "'");
    }
    by_class[*docs[i].label == ClassLabel::kSarcastic ? 0 : 1].push_back(i);
  }
  if (by_class[0].empty() || by_class[1].empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "stratified split needs at least one document of each class");
  }

  std::mt19937_64 rng(seed);
  std::vector<bool> is_test(docs.size(), false);
  for (auto& members : by_class) {
    const size_t n = members.size();
    auto k = static_cast<size_t>(std::llround(static_cast<double>(n) * test_fraction));
    k = std::min(k, n - 1);
    for (size_t i = n - 1; i > 0; --i) {
      std::swap(members[i], members[BoundedDraw(rng, i + 1)]);
    }
    for (size_t j = 0; j < k; ++j) is_test[members[j]] = true;
  }

  Split split;
  for (size_t i = 0; i < docs.size(); ++i) {
    (is_test[i] ? split.test : split.train).push_back(docs[i]);
  }
  return split;
}

}  // namespace sarcasm
