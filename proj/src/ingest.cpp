/*
 * Copyright 2026 The fedtext Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "fedtext/ingest.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "fedtext/csv.hpp"

namespace fedtext {
namespace {

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
char to_lower_ascii(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool is_url_chunk(std::string_view chunk) {
  return chunk.starts_with("http://") || chunk.starts_with("https://") ||
         chunk.starts_with("www.");
}

void check_disjoint(const std::set<std::string>& a,
                    const std::set<std::string>& b, const char* what) {
  for (const auto& label : a) {
    if (b.count(label)) {
      throw std::invalid_argument("label schema: '" + label +
                                  "' appears in two sets (" + what + ")");
    }
  }
}

}  // namespace

void LabelSchema::validate() const {
  if (harmful_labels.empty()) {
    throw std::invalid_argument("label schema: harmful_labels is empty");
  }
  if (normal_labels.empty()) {
    throw std::invalid_argument("label schema: normal_labels is empty");
  }
  check_disjoint(harmful_labels, normal_labels, "harmful/normal");
  check_disjoint(harmful_labels, dropped_labels, "harmful/dropped");
  check_disjoint(normal_labels, dropped_labels, "normal/dropped");
}

void Corpus::recount() {
  harmful_count = 0;
  normal_count = 0;
  for (const auto& e : examples) {
    (e.label == 1 ? harmful_count : normal_count) += 1;
  }
}

std::vector<RawRecord> load_corpus(const std::filesystem::path& path,
                                   const LabelSchema& schema,
                                   const ColumnMapping& columns) {
  schema.validate();
  if (!std::filesystem::exists(path)) {
    throw std::runtime_error("dataset file not found: " + path.string());
  }
  const DelimitedTable table = read_delimited_file(path, columns.delimiter);
  const auto text_col = table.column(columns.text_column);
  if (!text_col) {
    throw std::runtime_error("dataset is missing the declared text column '" +
                             columns.text_column + "'");
  }
  const auto label_col = table.column(columns.label_column);
  if (!label_col) {
    throw std::runtime_error("dataset is missing the declared label column '" +
                             columns.label_column + "'");
  }

  std::vector<RawRecord> records;
  records.reserve(table.rows.size());
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    const auto& fields = table.rows[row];
    if (fields.size() <= std::max(*text_col, *label_col)) {
      throw std::runtime_error("row " + std::to_string(row) +
                               " has too few fields");
    }
    const std::string& label = fields[*label_col];
    if (schema.dropped_labels.count(label)) continue;
    if (!schema.harmful_labels.count(label) &&
        !schema.normal_labels.count(label)) {
      throw std::runtime_error("row " + std::to_string(row) +
                               " carries label '" + label +
                               "' which is in no schema set");
    }
    records.push_back(
        {"r" + std::to_string(row), fields[*text_col], label});
  }
  return records;
}

std::vector<std::string> preprocess(std::string_view text,
                                    const std::set<std::string>& stopwords) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && is_ascii_space(text[i])) ++i;
    std::size_t j = i;
    while (j < n && !is_ascii_space(text[j])) ++j;
    if (j > i) {
      const std::string_view chunk = text.substr(i, j - i);
      if (chunk[0] != '@' && !is_url_chunk(chunk)) {
        std::string token;
        token.reserve(chunk.size());
        for (char c : chunk) {
          if (is_ascii_alpha(c)) token.push_back(to_lower_ascii(c));
          // '#', digits, punctuation, control and non-ASCII bytes all drop
        }
        if (!token.empty() && !stopwords.count(token)) {
          tokens.push_back(std::move(token));
        }
      }
    }
    i = j;
  }
  return tokens;
}

ExampleRecord binarize(const RawRecord& record, const LabelSchema& schema) {
  int label;
  if (schema.harmful_labels.count(record.original_label)) {
    label = 1;
  } else if (schema.normal_labels.count(record.original_label)) {
    label = 0;
  } else {
    throw std::invalid_argument("cannot binarize label '" +
                                record.original_label + "'");
  }
  return {record.id, {}, label};
}

Corpus remove_hapax(const Corpus& corpus) {
  std::unordered_map<std::string_view, std::size_t> freq;
  for (const auto& e : corpus.examples) {
    for (const auto& t : e.tokens) ++freq[t];
  }
  Corpus out;
  out.examples.reserve(corpus.examples.size());
  for (const auto& e : corpus.examples) {
    ExampleRecord kept{e.id, {}, e.label};
    kept.tokens.reserve(e.tokens.size());
    for (const auto& t : e.tokens) {
      if (freq.at(t) >= 2) kept.tokens.push_back(t);
    }
    out.examples.push_back(std::move(kept));
  }
  out.recount();
  return out;
}

Corpus build_corpus(const std::vector<RawRecord>& records,
                    const LabelSchema& schema,
                    const std::set<std::string>& stopwords) {
  Corpus corpus;
  corpus.examples.reserve(records.size());
  for (const auto& raw : records) {
    ExampleRecord example = binarize(raw, schema);
    example.tokens = preprocess(raw.text, stopwords);
    corpus.examples.push_back(std::move(example));
  }
  corpus.recount();
  return corpus;
}

std::set<std::string> load_stopword_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open stop-word file: " + path.string());
  }
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string word;
    for (char c : line) {
      if (is_ascii_space(c) || c == '#') break;
      word.push_back(to_lower_ascii(c));
    }
    if (!word.empty()) words.insert(std::move(word));
  }
  return words;
}

}  // namespace fedtext
