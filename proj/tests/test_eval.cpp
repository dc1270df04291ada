#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "comparo/errors.hpp"
#include "comparo/eval.hpp"
#include "comparo/rng.hpp"
#include "support/metric_oracle.hpp"

using namespace comparo;
using comparo::testing::Confusion;
using comparo::testing::oracle_prf;

namespace {

constexpr Label P1 = Label::kProduct1;
constexpr Label P2 = Label::kProduct2;
constexpr Label A = Label::kAspect;
constexpr Label PR = Label::kPredicate;
constexpr Label N = Label::kNone;

LabelSequence random_sequence(Rng& rng, std::size_t length) {
  LabelSequence out;
  for (std::size_t t = 0; t < length; ++t) out.push_back(label_from_index(rng.index(kNumLabels)));
  return out;
}

LabeledSentence sentence_of(const LabelSequence& labels) {
  LabeledSentence s;
  for (std::size_t t = 0; t < labels.size(); ++t) s.tokens.push_back({"w" + std::to_string(t), {}, {}});
  s.labels = labels;
  return s;
}

}  // namespace

TEST_CASE("score conventions") {
  const Prf empty = score({});
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f1 == 0.0);
  const Prf half = score({1, 1, 1});
  CHECK(half.precision == 0.5);
  CHECK(half.f1 == 0.5);
  CHECK(score({0, 3, 2}).f1 == 0.0);
}

TEST_CASE("identification worked example") {
  const std::vector<LabelSequence> gold = {{P1, N, PR}};
  const std::vector<LabelSequence> pred = {{P1, PR, PR}};
  const ClassScore s = identification_metrics(gold, pred);
  CHECK(s.counts == ClassCounts{2, 1, 0});
  CHECK(s.prf.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(s.prf.recall == 1.0);
  CHECK(s.prf.f1 == doctest::Approx(0.8).epsilon(1e-15));

  const std::vector<LabelSequence> none = {{N, N, N}};
  const ClassScore zero = identification_metrics(gold, none);
  CHECK(zero.prf.precision == 0.0);
  CHECK(zero.prf.recall == 0.0);
  CHECK(zero.prf.f1 == 0.0);

  const ClassScore perfect = identification_metrics(gold, gold);
  CHECK(perfect.prf.precision == 1.0);
  CHECK(perfect.prf.recall == 1.0);
  CHECK(perfect.prf.f1 == 1.0);
}

TEST_CASE("classification worked example") {
  const std::vector<LabelSequence> gold = {{A, A, N}};
  const std::vector<LabelSequence> pred = {{A, N, A}};
  const auto scores = classification_metrics(gold, pred);
  REQUIRE(scores.size() == 4);
  CHECK(scores.at(A).counts == ClassCounts{1, 1, 1});
  CHECK(scores.at(A).prf.precision == 0.5);
  CHECK(scores.at(A).prf.recall == 0.5);
  CHECK(scores.at(A).prf.f1 == 0.5);
  for (Label absent : {P1, P2, PR}) {
    CHECK(scores.at(absent).counts == ClassCounts{});
    CHECK(scores.at(absent).prf.f1 == 0.0);
  }
  CHECK(scores.count(N) == 0);

  const std::vector<LabelSequence> mixed = {{P1, P2, A, PR, N}};
  for (const auto& [label, s] : classification_metrics(mixed, mixed)) {
    CAPTURE(to_string(label));
    CHECK(s.prf.f1 == 1.0);
  }
}

TEST_CASE("metrics agree with a confusion-matrix oracle") {
  Rng rng(2024);
  for (int round = 0; round < 200; ++round) {
    std::vector<LabelSequence> gold, pred;
    const std::size_t n = 1 + rng.index(6);
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t len = 1 + rng.index(30);
      gold.push_back(random_sequence(rng, len));
      pred.push_back(random_sequence(rng, len));
    }
    const Confusion oracle(gold, pred);

    const ClassScore id = identification_metrics(gold, pred);
    CHECK(id.counts == oracle.identification());
    const Prf want = oracle_prf(oracle.identification());
    CHECK(std::abs(id.prf.precision - want.precision) <= 1e-12);
    CHECK(std::abs(id.prf.recall - want.recall) <= 1e-12);
    CHECK(std::abs(id.prf.f1 - want.f1) <= 1e-12);

    const auto per_class = classification_metrics(gold, pred);
    for (Label c : kEntityLabels) {
      const ClassScore& got = per_class.at(c);
      CHECK(got.counts == oracle.for_class(c));
      const Prf w = oracle_prf(oracle.for_class(c));
      CHECK(std::abs(got.prf.f1 - w.f1) <= 1e-12);
      for (double v : {got.prf.precision, got.prf.recall, got.prf.f1}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }

    std::vector<LabeledSentence> sentences;
    for (const auto& g : gold) sentences.push_back(sentence_of(g));
    CHECK(identification_metrics(sentences, pred).counts == id.counts);
  }
}

TEST_CASE("misaligned input names the sentence") {
  const std::vector<LabelSequence> gold = {{N}, {P1, N}};
  const std::vector<LabelSequence> pred = {{N}, {P1}};
  CHECK_THROWS_WITH_AS(identification_metrics(gold, pred), doctest::Contains("sentence 1"),
                       PreconditionError);
  CHECK_THROWS_AS(classification_metrics(gold, pred), PreconditionError);
  const std::vector<LabelSequence> shorter = {{N}};
  CHECK_THROWS_AS(identification_metrics(gold, shorter), PreconditionError);
}

TEST_CASE("evaluate_predictions and report formats") {
  const std::vector<LabeledSentence> gold = {sentence_of({P1, N, PR}), sentence_of({A, A, N})};
  const std::vector<LabelSequence> pred = {{P1, PR, PR}, {A, N, A}};
  const MetricsReport report = evaluate_predictions(gold, pred);
  CHECK(report.sentences == 2);
  CHECK(report.tokens == 6);
  CHECK(report.identification.counts == ClassCounts{3, 2, 1});

  const std::string kv = format_report_key_values(report);
  CHECK(kv.find("identification.any.precision=0.6000\n") != std::string::npos);
  CHECK(kv.find("classification.Aspect.f1=0.5000\n") != std::string::npos);
  CHECK(kv.find("classification.Product2.recall=0.0000\n") != std::string::npos);
  CHECK(std::count(kv.begin(), kv.end(), '\n') == 15);

  const std::string table = format_report_table(report);
  CHECK(table.find("identification") != std::string::npos);
  CHECK(table.find("Predicate") != std::string::npos);
  CHECK(std::count(table.begin(), table.end(), '\n') == 6);
}

TEST_CASE("evaluate_model rejects an empty test set") {
  const ModelConfig cfg;
  CHECK_THROWS_AS(evaluate_model(Dataset{}, TaggerParams{}, cfg, EmbeddingTable(300)),
                  PreconditionError);
}
