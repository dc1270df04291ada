#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "comparo/corpus.hpp"
#include "comparo/embeddings.hpp"
#include "comparo/model_config.hpp"
#include "comparo/params.hpp"

namespace comparo {

struct TrainReport {
  /// Mean per-sentence loss of each epoch, measured before each update.
  std::vector<double> epoch_losses;
  TaggerParams params;
  std::size_t steps = 0;
};

using EpochCallback = std::function<void(std::size_t epoch, double mean_loss)>;

/// One optimizer step per sentence, sentence order reshuffled every epoch
/// from the config seed. The embedding table is only read.
TrainReport train(const Dataset& data, const ModelConfig& config, const EmbeddingTable& table,
                  const EpochCallback& on_epoch = {});

/// Fraction of tokens whose predicted label equals the gold label.
double token_accuracy(const Dataset& data, const TaggerParams& params, const ModelConfig& config,
                      const EmbeddingTable& table);

}  // namespace comparo
