#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "comparo/corpus.hpp"
#include "comparo/embeddings.hpp"
#include "comparo/label.hpp"
#include "comparo/model_config.hpp"
#include "comparo/params.hpp"

namespace comparo {

struct ClassCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  bool operator==(const ClassCounts&) const = default;
};

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// 0/0 is taken as 0 for precision, recall and F1.
Prf score(const ClassCounts& counts) noexcept;

struct ClassScore {
  ClassCounts counts;
  Prf prf;
};

using LabelSequence = std::vector<Label>;

/// Token-level "is this any entity" scoring. Throws PreconditionError naming
/// the first sentence whose lengths differ.
ClassScore identification_metrics(std::span<const LabelSequence> gold,
                                  std::span<const LabelSequence> pred);
ClassScore identification_metrics(std::span<const LabeledSentence> gold,
                                  std::span<const LabelSequence> pred);

/// Token-level one-vs-rest scoring for the four entity classes.
std::map<Label, ClassScore> classification_metrics(std::span<const LabelSequence> gold,
                                                   std::span<const LabelSequence> pred);
std::map<Label, ClassScore> classification_metrics(std::span<const LabeledSentence> gold,
                                                   std::span<const LabelSequence> pred);

struct MetricsReport {
  ClassScore identification;
  std::map<Label, ClassScore> per_class;
  std::size_t sentences = 0;
  std::size_t tokens = 0;
};

MetricsReport evaluate_predictions(std::span<const LabeledSentence> gold,
                                   std::span<const LabelSequence> pred);

/// Tags every test sentence and scores it. Throws PreconditionError on an
/// empty test set.
MetricsReport evaluate_model(const Dataset& test, const TaggerParams& params,
                             const ModelConfig& config, const EmbeddingTable& table);

std::string format_report_table(const MetricsReport& report);

/// `identification.any.precision=0.6667`, `classification.Aspect.f1=...`.
std::string format_report_key_values(const MetricsReport& report);

}  // namespace comparo
