#include "comparo/eval.hpp"

#include <cstdio>

#include "comparo/errors.hpp"
#include "comparo/tagger.hpp"

namespace comparo {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

void check_aligned(std::span<const LabelSequence> gold, std::span<const LabelSequence> pred) {
  if (gold.size() != pred.size()) {
    throw PreconditionError("gold has " + std::to_string(gold.size()) +
                            " sentences but predictions have " + std::to_string(pred.size()));
  }
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].size() != pred[i].size()) {
      throw PreconditionError("sentence " + std::to_string(i) + ": " +
                              std::to_string(gold[i].size()) + " gold labels but " +
                              std::to_string(pred[i].size()) + " predicted");
    }
  }
}

std::vector<LabelSequence> gold_labels(std::span<const LabeledSentence> gold) {
  std::vector<LabelSequence> out;
  out.reserve(gold.size());
  for (const auto& s : gold) out.push_back(s.labels);
  return out;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

Prf score(const ClassCounts& counts) noexcept {
  Prf prf;
  prf.precision = ratio(counts.tp, counts.tp + counts.fp);
  prf.recall = ratio(counts.tp, counts.tp + counts.fn);
  const double sum = prf.precision + prf.recall;
  prf.f1 = sum == 0.0 ? 0.0 : 2.0 * prf.precision * prf.recall / sum;
  return prf;
}

ClassScore identification_metrics(std::span<const LabelSequence> gold,
                                  std::span<const LabelSequence> pred) {
  check_aligned(gold, pred);
  ClassCounts counts;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t t = 0; t < gold[i].size(); ++t) {
      const bool g = gold[i][t] != Label::kNone;
      const bool p = pred[i][t] != Label::kNone;
      counts.tp += (g && p) ? 1 : 0;
      counts.fp += (!g && p) ? 1 : 0;
      counts.fn += (g && !p) ? 1 : 0;
    }
  }
  return {counts, score(counts)};
}

ClassScore identification_metrics(std::span<const LabeledSentence> gold,
                                  std::span<const LabelSequence> pred) {
  return identification_metrics(gold_labels(gold), pred);
}

std::map<Label, ClassScore> classification_metrics(std::span<const LabelSequence> gold,
                                                   std::span<const LabelSequence> pred) {
  check_aligned(gold, pred);
  std::map<Label, ClassCounts> counts;
  for (Label c : kEntityLabels) counts[c] = {};
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t t = 0; t < gold[i].size(); ++t) {
      const Label g = gold[i][t];
      const Label p = pred[i][t];
      if (g == p) {
        if (g != Label::kNone) ++counts[g].tp;
        continue;
      }
      if (p != Label::kNone) ++counts[p].fp;
      if (g != Label::kNone) ++counts[g].fn;
    }
  }
  std::map<Label, ClassScore> out;
  for (const auto& [label, c] : counts) out[label] = {c, score(c)};
  return out;
}

std::map<Label, ClassScore> classification_metrics(std::span<const LabeledSentence> gold,
                                                   std::span<const LabelSequence> pred) {
  return classification_metrics(gold_labels(gold), pred);
}

MetricsReport evaluate_predictions(std::span<const LabeledSentence> gold,
                                   std::span<const LabelSequence> pred) {
  const auto labels = gold_labels(gold);
  MetricsReport report;
  report.identification = identification_metrics(labels, pred);
  report.per_class = classification_metrics(labels, pred);
  report.sentences = gold.size();
  for (const auto& s : labels) report.tokens += s.size();
  return report;
}

MetricsReport evaluate_model(const Dataset& test, const TaggerParams& params,
                             const ModelConfig& config, const EmbeddingTable& table) {
  if (test.empty()) throw PreconditionError("test set has no sentences");
  std::vector<LabelSequence> predictions;
  predictions.reserve(test.size());
  for (std::size_t i = 0; i < test.size(); ++i) {
    check_sentence(test.sentences[i], i);
    predictions.push_back(predict(test.sentences[i], params, config, table));
  }
  return evaluate_predictions(test.sentences, predictions);
}

std::string format_report_table(const MetricsReport& report) {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof line, "%-16s %-10s %9s %9s %9s %7s %7s %7s\n", "task", "class",
                "precision", "recall", "f1", "tp", "fp", "fn");
  out += line;
  auto row = [&](const char* task, std::string_view cls, const ClassScore& s) {
    std::snprintf(line, sizeof line, "%-16s %-10.*s %9.4f %9.4f %9.4f %7zu %7zu %7zu\n", task,
                  static_cast<int>(cls.size()), cls.data(), s.prf.precision, s.prf.recall, s.prf.f1,
                  s.counts.tp, s.counts.fp, s.counts.fn);
    out += line;
  };
  row("identification", "any", report.identification);
  for (Label c : kEntityLabels) {
    const auto it = report.per_class.find(c);
    row("classification", to_string(c), it == report.per_class.end() ? ClassScore{} : it->second);
  }
  return out;
}

std::string format_report_key_values(const MetricsReport& report) {
  std::string out;
  auto emit = [&](std::string_view task, std::string_view cls, const Prf& prf) {
    const std::string prefix = std::string(task) + "." + std::string(cls) + ".";
    out += prefix + "precision=" + fixed4(prf.precision) + "\n";
    out += prefix + "recall=" + fixed4(prf.recall) + "\n";
    out += prefix + "f1=" + fixed4(prf.f1) + "\n";
  };
  emit("identification", "any", report.identification.prf);
  for (Label c : kEntityLabels) {
    const auto it = report.per_class.find(c);
    emit("classification", to_string(c), it == report.per_class.end() ? Prf{} : it->second.prf);
  }
  return out;
}

}  // namespace comparo
