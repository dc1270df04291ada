#include "comparo/params.hpp"

#include <bit>
#include <cmath>

#include "comparo/errors.hpp"
#include "comparo/rng.hpp"

namespace comparo {
namespace {

std::span<double> span_of(Eigen::MatrixXd& m) {
  return {m.data(), static_cast<std::size_t>(m.size())};
}
std::span<double> span_of(Eigen::VectorXd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

template <typename Params, typename View, typename Fn>
void collect(Params& params, std::vector<View>& out, Fn&& span_fn) {
  for (std::size_t l = 0; l < params.layers.size(); ++l) {
    auto& layer = params.layers[l];
    const std::string prefix = "layer" + std::to_string(l) + ".";
    auto add_cell = [&](auto& cell, const std::string& dir) {
      out.push_back({prefix + dir + ".W", span_fn(cell.W)});
      out.push_back({prefix + dir + ".U", span_fn(cell.U)});
      out.push_back({prefix + dir + ".b", span_fn(cell.b)});
    };
    add_cell(layer.forward, "forward");
    if (layer.backward) add_cell(*layer.backward, "backward");
  }
  out.push_back({"head.W", span_fn(params.head_W)});
  out.push_back({"head.b", span_fn(params.head_b)});
}

void fill_uniform(Eigen::Ref<Eigen::MatrixXd> m, double limit, Rng& rng) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, c) = rng.uniform(-limit, limit);
  }
}

double glorot_limit(std::size_t fan_in, std::size_t fan_out) {
  return std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
}

void init_cell(LstmCellParams& cell, Rng& rng) {
  const std::size_t input = cell.input_dim();
  const std::size_t hidden = cell.hidden_dim();
  constexpr Gate kGates[] = {Gate::kInput, Gate::kForget, Gate::kCell, Gate::kOutput};
  for (Gate gate : kGates) fill_uniform(cell.gate_W(gate), glorot_limit(input, hidden), rng);
  for (Gate gate : kGates) fill_uniform(cell.gate_U(gate), glorot_limit(hidden, hidden), rng);
  cell.b.setZero();
  cell.gate_b(Gate::kForget).setConstant(kForgetBiasInit);
}

void expect_shape(const char* what, Eigen::Index rows, Eigen::Index cols, Eigen::Index want_rows,
                  Eigen::Index want_cols) {
  if (rows != want_rows || cols != want_cols) {
    throw ShapeError(std::string(what) + " is " + std::to_string(rows) + "x" +
                     std::to_string(cols) + ", expected " + std::to_string(want_rows) + "x" +
                     std::to_string(want_cols));
  }
}

void check_cell(const LstmCellParams& cell, std::size_t input, std::size_t hidden) {
  const auto I = static_cast<Eigen::Index>(input);
  const auto H = static_cast<Eigen::Index>(hidden);
  expect_shape("LSTM W", cell.W.rows(), cell.W.cols(), 4 * H, I);
  expect_shape("LSTM U", cell.U.rows(), cell.U.cols(), 4 * H, H);
  expect_shape("LSTM b", cell.b.rows(), cell.b.cols(), 4 * H, 1);
}

}  // namespace

LstmCellParams LstmCellParams::zeros(std::size_t input_dim, std::size_t hidden_dim) {
  const auto I = static_cast<Eigen::Index>(input_dim);
  const auto H = static_cast<Eigen::Index>(hidden_dim);
  return {Eigen::MatrixXd::Zero(4 * H, I), Eigen::MatrixXd::Zero(4 * H, H),
          Eigen::VectorXd::Zero(4 * H)};
}

TaggerParams TaggerParams::zeros(const ModelConfig& config) {
  TaggerParams params;
  for (std::size_t l = 0; l < config.num_layers; ++l) {
    LayerParams layer{LstmCellParams::zeros(config.layer_input_dim(l), config.hidden_dim), {}};
    if (config.direction == Direction::kBidirectional) {
      layer.backward = LstmCellParams::zeros(config.layer_input_dim(l), config.hidden_dim);
    }
    params.layers.push_back(std::move(layer));
  }
  params.head_W = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(config.num_classes),
                                        static_cast<Eigen::Index>(config.output_width()));
  params.head_b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(config.num_classes));
  return params;
}

std::size_t TaggerParams::parameter_count() const {
  std::size_t count = 0;
  for (const auto& view : tensors(*this)) count += view.values.size();
  return count;
}

std::vector<TensorView> tensors(TaggerParams& params) {
  std::vector<TensorView> out;
  collect(params, out, [](auto& t) { return span_of(t); });
  return out;
}

std::vector<ConstTensorView> tensors(const TaggerParams& params) {
  std::vector<ConstTensorView> out;
  collect(params, out, [](const auto& t) {
    return std::span<const double>(t.data(), static_cast<std::size_t>(t.size()));
  });
  return out;
}

void check_shapes(const TaggerParams& params, const ModelConfig& config) {
  if (params.layers.size() != config.num_layers) {
    throw ShapeError("expected " + std::to_string(config.num_layers) + " layers, found " +
                     std::to_string(params.layers.size()));
  }
  const bool bidirectional = config.direction == Direction::kBidirectional;
  for (std::size_t l = 0; l < params.layers.size(); ++l) {
    const auto& layer = params.layers[l];
    check_cell(layer.forward, config.layer_input_dim(l), config.hidden_dim);
    if (layer.backward.has_value() != bidirectional) {
      throw ShapeError("layer " + std::to_string(l) + " direction does not match the config");
    }
    if (layer.backward) check_cell(*layer.backward, config.layer_input_dim(l), config.hidden_dim);
  }
  expect_shape("head W", params.head_W.rows(), params.head_W.cols(),
               static_cast<Eigen::Index>(config.num_classes),
               static_cast<Eigen::Index>(config.output_width()));
  expect_shape("head b", params.head_b.rows(), params.head_b.cols(),
               static_cast<Eigen::Index>(config.num_classes), 1);
}

bool all_finite(const TaggerParams& params) {
  for (const auto& view : tensors(params)) {
    for (double v : view.values) {
      if (!std::isfinite(v)) return false;
    }
  }
  return true;
}

bool bitwise_equal(const TaggerParams& a, const TaggerParams& b) {
  const auto ta = tensors(a);
  const auto tb = tensors(b);
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].name != tb[i].name || ta[i].values.size() != tb[i].values.size()) return false;
    for (std::size_t k = 0; k < ta[i].values.size(); ++k) {
      if (std::bit_cast<std::uint64_t>(ta[i].values[k]) !=
          std::bit_cast<std::uint64_t>(tb[i].values[k])) {
        return false;
      }
    }
  }
  return true;
}

TaggerParams init_params(const ModelConfig& config) {
  validate(config);
  TaggerParams params = TaggerParams::zeros(config);
  Rng rng(config.seed);
  for (auto& layer : params.layers) {
    init_cell(layer.forward, rng);
    if (layer.backward) init_cell(*layer.backward, rng);
  }
  fill_uniform(params.head_W, glorot_limit(config.output_width(), config.num_classes), rng);
  return params;
}

}  // namespace comparo
