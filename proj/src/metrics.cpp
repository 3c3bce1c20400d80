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
#include "fedtext/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fedtext {

double roc_auc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) {
    throw std::invalid_argument("roc_auc: scores and labels differ in length");
  }
  const std::size_t n = scores.size();
  std::size_t n_pos = 0;
  for (int y : labels) n_pos += (y == 1);
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw std::invalid_argument("roc_auc: both classes must be present");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Midranks: every member of a tie group gets the mean rank of the group.
  double pos_rank_sum = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double midrank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) {
      if (labels[order[k]] == 1) pos_rank_sum += midrank;
    }
    i = j + 1;
  }

  const double np = static_cast<double>(n_pos);
  const double nn = static_cast<double>(n_neg);
  return (pos_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

EvalReport confusion_and_prf(std::span<const double> scores,
                             std::span<const int> labels, double threshold) {
  if (scores.size() != labels.size()) {
    throw std::invalid_argument(
        "confusion_and_prf: scores and labels differ in length");
  }
  if (scores.empty()) {
    throw std::invalid_argument("confusion_and_prf: empty input");
  }
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("confusion_and_prf: threshold must be in (0,1)");
  }

  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool pred = scores[i] >= threshold;
    if (labels[i] == 1) {
      (pred ? tp : fn) += 1;
    } else {
      (pred ? fp : tn) += 1;
    }
  }

  auto ratio = [](std::size_t a, std::size_t b) {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
  };
  auto f1_of = [](double p, double r) {
    return (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
  };

  EvalReport rep;
  rep.threshold = threshold;
  rep.n_examples = scores.size();
  rep.accuracy = ratio(tp + tn, scores.size());

  rep.precision_harmful = ratio(tp, tp + fp);
  rep.recall_harmful = ratio(tp, tp + fn);
  rep.f1_harmful = f1_of(rep.precision_harmful, rep.recall_harmful);

  const double precision_normal = ratio(tn, tn + fn);
  const double recall_normal = ratio(tn, tn + fp);
  const double f1_normal = f1_of(precision_normal, recall_normal);

  const double support_harmful = static_cast<double>(tp + fn);
  const double support_normal = static_cast<double>(tn + fp);
  const double total = support_harmful + support_normal;
  rep.precision_weighted =
      (support_harmful * rep.precision_harmful + support_normal * precision_normal) / total;
  rep.recall_weighted =
      (support_harmful * rep.recall_harmful + support_normal * recall_normal) / total;
  rep.f1_weighted =
      (support_harmful * rep.f1_harmful + support_normal * f1_normal) / total;
  return rep;
}

EvalReport evaluate_scores(std::span<const double> scores,
                           std::span<const int> labels, double threshold) {
  EvalReport rep = confusion_and_prf(scores, labels, threshold);
  rep.auc = roc_auc(scores, labels);
  return rep;
}

}  // namespace fedtext
