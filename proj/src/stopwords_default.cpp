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

namespace fedtext {

// The common English stop-word list, with contractions written the way the
// preprocessing pipeline emits them (apostrophes stripped: "don't" ->
// "dont"). Overridable via dataset.stopwords_path.
const std::set<std::string>& default_english_stopwords() {
  static const std::set<std::string> words = {
      "a",       "about",   "above",   "after",    "again",    "against",
      "ain",     "all",     "am",      "an",       "and",      "any",
      "are",     "aren",    "arent",   "as",       "at",       "be",
      "because", "been",    "before",  "being",    "below",    "between",
      "both",    "but",     "by",      "can",      "couldn",   "couldnt",
      "d",       "did",     "didn",    "didnt",    "do",       "does",
      "doesn",   "doesnt",  "doing",   "don",      "dont",     "down",
      "during",  "each",    "few",     "for",      "from",     "further",
      "had",     "hadn",    "hadnt",   "has",      "hasn",     "hasnt",
      "have",    "haven",   "havent",  "having",   "he",       "her",
      "here",    "hers",    "herself", "him",      "himself",  "his",
      "how",     "i",       "if",      "in",       "into",     "is",
      "isn",     "isnt",    "it",      "its",      "itself",   "just",
      "ll",      "m",       "ma",      "me",       "mightn",   "mightnt",
      "more",    "most",    "mustn",   "mustnt",   "my",       "myself",
      "needn",   "neednt",  "no",      "nor",      "not",      "now",
      "o",       "of",      "off",     "on",       "once",     "only",
      "or",      "other",   "our",     "ours",     "ourselves", "out",
      "over",    "own",     "re",      "s",        "same",     "shan",
      "shant",   "she",     "shes",    "should",   "shouldn",  "shouldnt",
      "shouldve", "so",     "some",    "such",     "t",        "than",
      "that",    "thatll",  "the",     "their",    "theirs",   "them",
      "themselves", "then", "there",   "these",    "they",     "this",
      "those",   "through", "to",      "too",      "under",    "until",
      "up",      "ve",      "very",    "was",      "wasn",     "wasnt",
      "we",      "were",    "weren",   "werent",   "what",     "when",
      "where",   "which",   "while",   "who",      "whom",     "why",
      "will",    "with",    "won",     "wont",     "wouldn",   "wouldnt",
      "y",       "you",     "youd",    "youll",    "your",     "youre",
      "yours",   "yourself", "yourselves", "youve",
  };
  return words;
}

}  // namespace fedtext
