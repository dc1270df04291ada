#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "comparo/corpus.hpp"
#include "comparo/embeddings.hpp"
#include "comparo/label.hpp"
#include "comparo/model_config.hpp"
#include "comparo/params.hpp"

namespace comparo {

/// One row per token, one column per Label.
using ProbabilityRows = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Max-shifted softmax.
Eigen::VectorXd softmax(const Eigen::Ref<const Eigen::VectorXd>& logits);

/// Runs the stacked (Bi)LSTM over the encoding and returns per-token class
/// probabilities. Throws ShapeError when the encoding width is not
/// config.input_dim.
ProbabilityRows forward(const SentenceEncoding& encoding, const TaggerParams& params,
                        const ModelConfig& config);

/// Mean negative log-probability of the gold labels.
double loss(const ProbabilityRows& probs, std::span<const Label> gold);

struct ForwardBackwardResult {
  double loss = 0.0;
  ProbabilityRows probs;
  TaggerParams gradients;
};

/// Loss and its exact gradient with respect to every parameter, by
/// backpropagation through time.
ForwardBackwardResult forward_backward(const SentenceEncoding& encoding, std::span<const Label> gold,
                                       const TaggerParams& params, const ModelConfig& config);

TaggerParams backward(const SentenceEncoding& encoding, std::span<const Label> gold,
                      const TaggerParams& params, const ModelConfig& config);

/// Row-wise argmax; ties go to the lowest class index.
std::vector<Label> argmax_labels(const ProbabilityRows& probs);

std::vector<Label> predict(const LabeledSentence& sentence, const TaggerParams& params,
                           const ModelConfig& config, const EmbeddingTable& table);

}  // namespace comparo
