#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "comparo/model_config.hpp"

namespace comparo {

/// Gate order inside the stacked LSTM weights.
enum class Gate : std::size_t { kInput = 0, kForget = 1, kCell = 2, kOutput = 3 };

/// Weights of one LSTM direction. The four gate matrices are stacked
/// row-wise in Gate order: rows [k*H, (k+1)*H) belong to gate k.
struct LstmCellParams {
  Eigen::MatrixXd W;  // 4H x input
  Eigen::MatrixXd U;  // 4H x H
  Eigen::VectorXd b;  // 4H

  static LstmCellParams zeros(std::size_t input_dim, std::size_t hidden_dim);

  std::size_t input_dim() const noexcept { return static_cast<std::size_t>(W.cols()); }
  std::size_t hidden_dim() const noexcept { return static_cast<std::size_t>(U.cols()); }

  auto gate_W(Gate gate) { return W.middleRows(gate_offset(gate), U.cols()); }
  auto gate_W(Gate gate) const { return W.middleRows(gate_offset(gate), U.cols()); }
  auto gate_U(Gate gate) { return U.middleRows(gate_offset(gate), U.cols()); }
  auto gate_U(Gate gate) const { return U.middleRows(gate_offset(gate), U.cols()); }
  auto gate_b(Gate gate) { return b.segment(gate_offset(gate), U.cols()); }
  auto gate_b(Gate gate) const { return b.segment(gate_offset(gate), U.cols()); }

 private:
  Eigen::Index gate_offset(Gate gate) const noexcept {
    return static_cast<Eigen::Index>(gate) * U.cols();
  }
};

struct LayerParams {
  LstmCellParams forward;
  /// Present only in bidirectional models; reads the sequence right to left.
  std::optional<LstmCellParams> backward;
};

/// Every trainable tensor of the tagger. Also used for gradients and for
/// optimizer moments, which share the shape.
struct TaggerParams {
  std::vector<LayerParams> layers;
  Eigen::MatrixXd head_W;  // classes x output_width
  Eigen::VectorXd head_b;  // classes

  static TaggerParams zeros(const ModelConfig& config);

  std::size_t parameter_count() const;
};

struct TensorView {
  std::string name;
  std::span<double> values;
};

struct ConstTensorView {
  std::string name;
  std::span<const double> values;
};

/// All tensors in a fixed order: per layer forward W, U, b, then backward
/// W, U, b when present, then head_W and head_b. The checkpoint layout and
/// the optimizer both follow this order.
std::vector<TensorView> tensors(TaggerParams& params);
std::vector<ConstTensorView> tensors(const TaggerParams& params);

/// Throws ShapeError when `params` does not fit `config`.
void check_shapes(const TaggerParams& params, const ModelConfig& config);

bool all_finite(const TaggerParams& params);

/// Same shapes and the same bits in every entry.
bool bitwise_equal(const TaggerParams& a, const TaggerParams& b);

/// Glorot-uniform weights from Rng(config.seed); zero biases except the
/// forget gate, which starts at 1.
TaggerParams init_params(const ModelConfig& config);

inline constexpr double kForgetBiasInit = 1.0;

}  // namespace comparo
