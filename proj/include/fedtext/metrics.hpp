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
#ifndef FEDTEXT_METRICS_HPP_
#define FEDTEXT_METRICS_HPP_

#include <cstddef>
#include <span>

namespace fedtext {

struct EvalReport {
  double auc = 0;
  double accuracy = 0;
  double precision_weighted = 0;
  double recall_weighted = 0;
  double f1_weighted = 0;
  double precision_harmful = 0;
  double recall_harmful = 0;
  double f1_harmful = 0;
  std::size_t n_examples = 0;
  double threshold = 0.5;
};

// Area under the ROC curve via the Mann-Whitney rank statistic with midrank
// tie correction: AUC = (sum of positive ranks - n_pos(n_pos+1)/2) /
// (n_pos * n_neg). For a binary task the one-vs-rest AUC of either class is
// the same number, so this single value is also the support-weighted AUC.
// Throws if only one class is present (AUC undefined).
double roc_auc(std::span<const double> scores, std::span<const int> labels);

// Thresholded confusion-matrix metrics. Predictions are score >= threshold;
// per-class precision/recall/F1 use the 0/0 -> 0 convention; the weighted
// variants average the two classes with class support as weights. AUC is
// not filled in here.
EvalReport confusion_and_prf(std::span<const double> scores,
                             std::span<const int> labels,
                             double threshold = 0.5);

// confusion_and_prf + roc_auc in one report.
EvalReport evaluate_scores(std::span<const double> scores,
                           std::span<const int> labels,
                           double threshold = 0.5);

}  // namespace fedtext

#endif  // FEDTEXT_METRICS_HPP_
