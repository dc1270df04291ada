#pragma once

#include <vector>

#include "comparo/eval.hpp"
#include "comparo/label.hpp"

namespace comparo::testing {

/// Full 5x5 confusion matrix, counted independently of the library.
struct Confusion {
  std::size_t cell[kNumLabels][kNumLabels] = {};

  Confusion(const std::vector<LabelSequence>& gold, const std::vector<LabelSequence>& pred) {
    for (std::size_t s = 0; s < gold.size(); ++s) {
      for (std::size_t t = 0; t < gold[s].size(); ++t) {
        ++cell[label_index(gold[s][t])][label_index(pred[s][t])];
      }
    }
  }

  ClassCounts for_class(Label c) const {
    const std::size_t k = label_index(c);
    ClassCounts out;
    out.tp = cell[k][k];
    for (std::size_t j = 0; j < kNumLabels; ++j) {
      if (j == k) continue;
      out.fp += cell[j][k];
      out.fn += cell[k][j];
    }
    return out;
  }

  ClassCounts identification() const {
    const std::size_t none = label_index(Label::kNone);
    ClassCounts out;
    for (std::size_t g = 0; g < kNumLabels; ++g) {
      for (std::size_t p = 0; p < kNumLabels; ++p) {
        if (g != none && p != none) out.tp += cell[g][p];
        if (g == none && p != none) out.fp += cell[g][p];
        if (g != none && p == none) out.fn += cell[g][p];
      }
    }
    return out;
  }
};

inline Prf oracle_prf(const ClassCounts& c) {
  const double p = c.tp + c.fp == 0 ? 0.0 : double(c.tp) / double(c.tp + c.fp);
  const double r = c.tp + c.fn == 0 ? 0.0 : double(c.tp) / double(c.tp + c.fn);
  return {p, r, p + r == 0.0 ? 0.0 : 2 * p * r / (p + r)};
}

}  // namespace comparo::testing
