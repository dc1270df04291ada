#include <benchmark/benchmark.h>

#include "comparo/preproc.hpp"
#include "comparo/rng.hpp"
#include "comparo/synthetic.hpp"
#include "comparo/tagger.hpp"
#include "comparo/weak_label.hpp"

namespace {

using namespace comparo;

ModelConfig bench_config(Direction direction, std::size_t layers, std::size_t hidden) {
  ModelConfig config;
  config.direction = direction;
  config.num_layers = layers;
  config.hidden_dim = hidden;
  return config;
}

SentenceEncoding random_encoding(std::size_t T, std::size_t width) {
  Rng rng(1);
  SentenceEncoding enc(static_cast<Eigen::Index>(T), static_cast<Eigen::Index>(width));
  for (Eigen::Index i = 0; i < enc.size(); ++i) enc.data()[i] = rng.uniform(-1.0, 1.0);
  return enc;
}

// Args: bidirectional flag, hidden size. Sentence length 20, Model1-sized input.
void BM_Forward(benchmark::State& state) {
  const auto config = bench_config(state.range(0) ? Direction::kBidirectional
                                                  : Direction::kUnidirectional,
                                   1, static_cast<std::size_t>(state.range(1)));
  const TaggerParams params = init_params(config);
  const SentenceEncoding enc = random_encoding(20, config.input_dim);
  for (auto _ : state) benchmark::DoNotOptimize(forward(enc, params, config));
  state.SetItemsProcessed(state.iterations() * 20);
}
BENCHMARK(BM_Forward)->Args({0, 32})->Args({0, 128})->Args({1, 128});

void BM_ForwardBackward(benchmark::State& state) {
  const auto config = bench_config(state.range(0) ? Direction::kBidirectional
                                                  : Direction::kUnidirectional,
                                   1, static_cast<std::size_t>(state.range(1)));
  const TaggerParams params = init_params(config);
  const SentenceEncoding enc = random_encoding(20, config.input_dim);
  const std::vector<Label> gold(20, Label::kNone);
  for (auto _ : state) benchmark::DoNotOptimize(forward_backward(enc, gold, params, config));
  state.SetItemsProcessed(state.iterations() * 20);
}
BENCHMARK(BM_ForwardBackward)->Args({0, 32})->Args({0, 128})->Args({1, 128});

void BM_TokenizeAndTag(benchmark::State& state) {
  const auto reviews = synthetic_reviews(200, 1, default_dictionaries());
  const TagLexicon& lexicon = TagLexicon::builtin();
  for (auto _ : state) {
    for (const auto& review : reviews) benchmark::DoNotOptimize(pos_tag(tokenize(review), lexicon));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(reviews.size()));
}
BENCHMARK(BM_TokenizeAndTag);

void BM_WeakLabel(benchmark::State& state) {
  const auto dictionaries = default_dictionaries();
  const auto reviews = synthetic_reviews(200, 1, dictionaries);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        weak_label(reviews, default_patterns(), dictionaries, TagLexicon::builtin()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(reviews.size()));
}
BENCHMARK(BM_WeakLabel);

}  // namespace

BENCHMARK_MAIN();
