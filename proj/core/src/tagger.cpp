#include "comparo/tagger.hpp"

#include <cmath>
#include <optional>

#include "comparo/errors.hpp"
#include "comparo/lstm.hpp"

namespace comparo {
namespace {

struct DirectionTrace {
  bool reversed = false;
  std::vector<LstmStep> steps;  // processing order
  Eigen::MatrixXd outputs;      // H x T, column t is the state after token t
};

struct LayerTrace {
  Eigen::MatrixXd inputs;  // input x T
  DirectionTrace forward;
  std::optional<DirectionTrace> backward;
};

struct Trace {
  std::vector<LayerTrace> layers;
  Eigen::MatrixXd top;     // output_width x T
  Eigen::MatrixXd logits;  // classes x T
};

std::size_t token_at(std::size_t k, std::size_t T, bool reversed) {
  return reversed ? T - 1 - k : k;
}

DirectionTrace run_direction(const Eigen::MatrixXd& inputs, const LstmCellParams& cell,
                             bool reversed) {
  const Eigen::Index H = cell.U.cols();
  const auto T = static_cast<std::size_t>(inputs.cols());
  DirectionTrace trace;
  trace.reversed = reversed;
  trace.steps.reserve(T);
  trace.outputs.resize(H, inputs.cols());
  Eigen::VectorXd h = Eigen::VectorXd::Zero(H);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(H);
  for (std::size_t k = 0; k < T; ++k) {
    const auto t = static_cast<Eigen::Index>(token_at(k, T, reversed));
    trace.steps.push_back(lstm_step(inputs.col(t), h, c, cell));
    h = trace.steps.back().h;
    c = trace.steps.back().c;
    trace.outputs.col(t) = h;
  }
  return trace;
}

Trace run_forward(const SentenceEncoding& encoding, const TaggerParams& params,
                  const ModelConfig& config) {
  if (encoding.rows() == 0) throw PreconditionError("cannot tag an empty sentence");
  if (static_cast<std::size_t>(encoding.cols()) != config.input_dim) {
    throw ShapeError("encoding width " + std::to_string(encoding.cols()) +
                     " does not match model input_dim " + std::to_string(config.input_dim));
  }
  check_shapes(params, config);

  Trace trace;
  Eigen::MatrixXd x = encoding.transpose();
  const Eigen::Index H = static_cast<Eigen::Index>(config.hidden_dim);
  for (const auto& layer : params.layers) {
    LayerTrace lt;
    lt.inputs = std::move(x);
    lt.forward = run_direction(lt.inputs, layer.forward, false);
    if (layer.backward) {
      lt.backward = run_direction(lt.inputs, *layer.backward, true);
      x.resize(2 * H, lt.inputs.cols());
      x.topRows(H) = lt.forward.outputs;
      x.bottomRows(H) = lt.backward->outputs;
    } else {
      x = lt.forward.outputs;
    }
    trace.layers.push_back(std::move(lt));
  }
  trace.logits = (params.head_W * x).colwise() + params.head_b;
  trace.top = std::move(x);
  return trace;
}

ProbabilityRows probabilities(const Eigen::MatrixXd& logits) {
  ProbabilityRows probs(logits.cols(), logits.rows());
  for (Eigen::Index t = 0; t < logits.cols(); ++t) probs.row(t) = softmax(logits.col(t)).transpose();
  return probs;
}

void check_gold(std::span<const Label> gold, Eigen::Index tokens) {
  if (static_cast<Eigen::Index>(gold.size()) != tokens) {
    throw PreconditionError("expected " + std::to_string(tokens) + " gold labels, got " +
                            std::to_string(gold.size()));
  }
}

// Accumulates the gradients of one direction into `grad` and its input
// gradients into `d_inputs`. `d_outputs` is H x T in token order.
void backprop_direction(const DirectionTrace& trace, const Eigen::MatrixXd& inputs,
                        const LstmCellParams& cell, const Eigen::MatrixXd& d_outputs,
                        LstmCellParams& grad, Eigen::MatrixXd& d_inputs) {
  const Eigen::Index H = cell.U.cols();
  const auto T = trace.steps.size();
  Eigen::MatrixXd d_pre(4 * H, static_cast<Eigen::Index>(T));  // token order
  Eigen::MatrixXd h_prev_cols = Eigen::MatrixXd::Zero(H, static_cast<Eigen::Index>(T));
  Eigen::VectorXd dh_next = Eigen::VectorXd::Zero(H);
  Eigen::VectorXd dc_next = Eigen::VectorXd::Zero(H);
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(H);

  for (std::size_t k = T; k-- > 0;) {
    const auto t = static_cast<Eigen::Index>(token_at(k, T, trace.reversed));
    const LstmStep& s = trace.steps[k];
    const Eigen::VectorXd& c_prev = k > 0 ? trace.steps[k - 1].c : zero;
    if (k > 0) h_prev_cols.col(t) = trace.steps[k - 1].h;

    const Eigen::ArrayXd dh = (d_outputs.col(t) + dh_next).array();
    const Eigen::ArrayXd i = s.input_gate.array();
    const Eigen::ArrayXd f = s.forget_gate.array();
    const Eigen::ArrayXd g = s.candidate.array();
    const Eigen::ArrayXd o = s.output_gate.array();
    const Eigen::ArrayXd tc = s.tanh_c.array();

    const Eigen::ArrayXd d_o = dh * tc;
    const Eigen::ArrayXd dc = dh * o * (1.0 - tc.square()) + dc_next.array();
    d_pre.col(t).segment(0, H) = (dc * g * i * (1.0 - i)).matrix();
    d_pre.col(t).segment(H, H) = (dc * c_prev.array() * f * (1.0 - f)).matrix();
    d_pre.col(t).segment(2 * H, H) = (dc * i * (1.0 - g.square())).matrix();
    d_pre.col(t).segment(3 * H, H) = (d_o * o * (1.0 - o)).matrix();

    dc_next = (dc * f).matrix();
    dh_next.noalias() = cell.U.transpose() * d_pre.col(t);
  }
  grad.W.noalias() += d_pre * inputs.transpose();
  grad.U.noalias() += d_pre * h_prev_cols.transpose();
  grad.b += d_pre.rowwise().sum();
  d_inputs.noalias() += cell.W.transpose() * d_pre;
}

}  // namespace

Eigen::VectorXd softmax(const Eigen::Ref<const Eigen::VectorXd>& logits) {
  const Eigen::ArrayXd shifted = (logits.array() - logits.maxCoeff()).exp();
  return (shifted / shifted.sum()).matrix();
}

ProbabilityRows forward(const SentenceEncoding& encoding, const TaggerParams& params,
                        const ModelConfig& config) {
  return probabilities(run_forward(encoding, params, config).logits);
}

double loss(const ProbabilityRows& probs, std::span<const Label> gold) {
  check_gold(gold, probs.rows());
  double total = 0.0;
  for (Eigen::Index t = 0; t < probs.rows(); ++t) {
    total -= std::log(probs(t, static_cast<Eigen::Index>(label_index(gold[static_cast<std::size_t>(t)]))));
  }
  return total / static_cast<double>(probs.rows());
}

ForwardBackwardResult forward_backward(const SentenceEncoding& encoding, std::span<const Label> gold,
                                       const TaggerParams& params, const ModelConfig& config) {
  const Trace trace = run_forward(encoding, params, config);
  const Eigen::Index T = trace.logits.cols();
  check_gold(gold, T);

  ForwardBackwardResult result;
  result.probs = probabilities(trace.logits);
  result.gradients = TaggerParams::zeros(config);

  // Fused softmax + cross-entropy: d loss / d logits = (p - onehot) / T.
  Eigen::MatrixXd d_logits = result.probs.transpose();
  double total = 0.0;
  for (Eigen::Index t = 0; t < T; ++t) {
    const auto gold_index = static_cast<Eigen::Index>(label_index(gold[static_cast<std::size_t>(t)]));
    const double max_logit = trace.logits.col(t).maxCoeff();
    const double log_sum =
        max_logit + std::log((trace.logits.col(t).array() - max_logit).exp().sum());
    total += log_sum - trace.logits(gold_index, t);
    d_logits(gold_index, t) -= 1.0;
  }
  d_logits /= static_cast<double>(T);
  result.loss = total / static_cast<double>(T);

  TaggerParams& grad = result.gradients;
  grad.head_W.noalias() = d_logits * trace.top.transpose();
  grad.head_b = d_logits.rowwise().sum();
  Eigen::MatrixXd d_x = params.head_W.transpose() * d_logits;

  const Eigen::Index H = static_cast<Eigen::Index>(config.hidden_dim);
  for (std::size_t l = params.layers.size(); l-- > 0;) {
    const LayerTrace& lt = trace.layers[l];
    const LayerParams& layer = params.layers[l];
    Eigen::MatrixXd d_inputs = Eigen::MatrixXd::Zero(lt.inputs.rows(), T);
    backprop_direction(lt.forward, lt.inputs, layer.forward, d_x.topRows(H),
                       grad.layers[l].forward, d_inputs);
    if (layer.backward) {
      backprop_direction(*lt.backward, lt.inputs, *layer.backward, d_x.bottomRows(H),
                         *grad.layers[l].backward, d_inputs);
    }
    d_x = std::move(d_inputs);
  }
  return result;
}

TaggerParams backward(const SentenceEncoding& encoding, std::span<const Label> gold,
                      const TaggerParams& params, const ModelConfig& config) {
  return forward_backward(encoding, gold, params, config).gradients;
}

std::vector<Label> argmax_labels(const ProbabilityRows& probs) {
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(probs.rows()));
  for (Eigen::Index t = 0; t < probs.rows(); ++t) {
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < probs.cols(); ++k) {
      if (probs(t, k) > probs(t, best)) best = k;
    }
    labels.push_back(label_from_index(static_cast<std::size_t>(best)));
  }
  return labels;
}

std::vector<Label> predict(const LabeledSentence& sentence, const TaggerParams& params,
                           const ModelConfig& config, const EmbeddingTable& table) {
  return argmax_labels(forward(encode_sentence(sentence, table), params, config));
}

}  // namespace comparo
