#include "comparo/trainer.hpp"

#include <numeric>

#include "comparo/errors.hpp"
#include "comparo/optimizer.hpp"
#include "comparo/rng.hpp"
#include "comparo/tagger.hpp"

namespace comparo {
namespace {

// Sentence order uses its own stream so that changing the number of
// parameters does not change the shuffle.
constexpr std::uint64_t kShuffleStream = 0x9e3779b97f4a7c15ULL;

}  // namespace

TrainReport train(const Dataset& data, const ModelConfig& config, const EmbeddingTable& table,
                  const EpochCallback& on_epoch) {
  validate(config);
  if (data.empty()) throw PreconditionError("training data is empty");
  if (table.dim() + kNumUpos != config.input_dim) {
    throw ShapeError("embedding dim " + std::to_string(table.dim()) + " + " +
                     std::to_string(kNumUpos) + " does not match model input_dim " +
                     std::to_string(config.input_dim));
  }

  std::vector<SentenceEncoding> encodings;
  encodings.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    check_sentence(data.sentences[i], i);
    encodings.push_back(encode_sentence(data.sentences[i], table));
  }

  TrainReport report;
  report.params = init_params(config);
  OptimizerState state = OptimizerState::zeros_like(report.params);
  Rng order_rng(config.seed ^ kShuffleStream);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    order_rng.shuffle(order.begin(), order.end());
    double total = 0.0;
    for (std::size_t index : order) {
      auto result = forward_backward(encodings[index], data.sentences[index].labels, report.params,
                                     config);
      total += result.loss;
      optimizer_step(report.params, std::move(result.gradients), state, config);
      ++report.steps;
    }
    const double mean = total / static_cast<double>(data.size());
    report.epoch_losses.push_back(mean);
    if (on_epoch) on_epoch(epoch, mean);
  }
  return report;
}

double token_accuracy(const Dataset& data, const TaggerParams& params, const ModelConfig& config,
                      const EmbeddingTable& table) {
  std::size_t correct = 0;
  std::size_t total = 0;
  for (const auto& sentence : data.sentences) {
    const auto predicted = predict(sentence, params, config, table);
    for (std::size_t i = 0; i < predicted.size(); ++i) {
      correct += predicted[i] == sentence.labels[i] ? 1 : 0;
    }
    total += predicted.size();
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

}  // namespace comparo
