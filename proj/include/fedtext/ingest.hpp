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
#ifndef FEDTEXT_INGEST_HPP_
#define FEDTEXT_INGEST_HPP_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fedtext {

// One row of a labeled source corpus, before preprocessing.
struct RawRecord {
  std::string id;
  std::string text;
  std::string original_label;
};

// Maps the source corpus' class labels onto the binary task. Labels in
// dropped_labels are discarded at load time (e.g. a "Spam" class handled
// by dedicated tooling upstream); any label outside the three sets is a
// hard error, never silently kept or skipped.
struct LabelSchema {
  std::set<std::string> harmful_labels;
  std::set<std::string> normal_labels;
  std::set<std::string> dropped_labels;

  // Throws std::invalid_argument unless the sets are pairwise disjoint and
  // harmful/normal are non-empty.
  void validate() const;
};

// A preprocessed, binary-labeled sample. label: harmful=1, normal=0.
struct ExampleRecord {
  std::string id;
  std::vector<std::string> tokens;
  int label = 0;
};

struct Corpus {
  std::vector<ExampleRecord> examples;
  std::size_t harmful_count = 0;
  std::size_t normal_count = 0;

  std::size_t size() const { return examples.size(); }
  void recount();
};

struct ColumnMapping {
  std::string text_column = "text";
  std::string label_column = "label";
  char delimiter = ',';
};

// Loads a delimiter-separated file with a header row. Rows labeled with a
// dropped label are excluded; a label outside the schema raises an error
// naming it. Record ids are the 0-based data-row numbers ("r0", "r1", ...).
std::vector<RawRecord> load_corpus(const std::filesystem::path& path,
                                   const LabelSchema& schema,
                                   const ColumnMapping& columns);

// Text cleanup pipeline, applied in this order: drop @-mentions and URL
// chunks wholesale, strip '#' markers (the tag word itself is kept), strip
// digits, punctuation and non-ASCII bytes, lowercase, collapse whitespace,
// split, drop stop words. May return an empty list; that is valid input
// for featurization (it maps to the zero vector).
//
// Stop words are matched against the lowercased tokens, so the set must
// contain lowercase entries.
std::vector<std::string> preprocess(std::string_view text,
                                    const std::set<std::string>& stopwords);

// Collapses the original label onto {harmful=1, normal=0}. The record's
// label must be in schema.harmful_labels or schema.normal_labels.
ExampleRecord binarize(const RawRecord& record, const LabelSchema& schema);

// Removes every token whose total corpus frequency is exactly 1.
// Frequencies are counted once on the input, over the whole corpus (not
// per example, not iteratively), so surviving tokens keep frequency >= 2.
Corpus remove_hapax(const Corpus& corpus);

// binarize + preprocess over all records; labels counted.
Corpus build_corpus(const std::vector<RawRecord>& records,
                    const LabelSchema& schema,
                    const std::set<std::string>& stopwords);

// Bundled default English stop-word list (lowercase, punctuation-free to
// match the token space produced by preprocess).
const std::set<std::string>& default_english_stopwords();

// One word per line; blank lines and '#' comments ignored; lowercased.
std::set<std::string> load_stopword_file(const std::filesystem::path& path);

}  // namespace fedtext

#endif  // FEDTEXT_INGEST_HPP_
