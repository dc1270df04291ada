#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "comparo/label.hpp"
#include "comparo/upos.hpp"

namespace comparo {

enum class Direction : std::uint8_t { kUnidirectional = 0, kBidirectional = 1 };

std::string_view to_string(Direction direction) noexcept;

struct ModelConfig {
  Direction direction = Direction::kUnidirectional;
  std::size_t num_layers = 1;
  /// Word vector width plus the 17-wide POS one-hot.
  std::size_t input_dim = 300 + kNumUpos;
  std::size_t hidden_dim = 128;
  std::size_t num_classes = kNumLabels;
  std::uint64_t seed = 1;
  double learning_rate = 1e-3;
  std::size_t epochs = 20;
  /// Global gradient-norm clipping threshold; disabled when empty.
  std::optional<double> clip_norm = 5.0;

  std::size_t num_directions() const noexcept {
    return direction == Direction::kBidirectional ? 2 : 1;
  }
  /// Width of one layer's output, and of the head's input.
  std::size_t output_width() const noexcept { return num_directions() * hidden_dim; }
  std::size_t layer_input_dim(std::size_t layer) const noexcept {
    return layer == 0 ? input_dim : output_width();
  }

  bool operator==(const ModelConfig&) const = default;
};

/// Throws std::invalid_argument on an unsupported configuration.
void validate(const ModelConfig& config);

/// The five named tagger variants: topology plus embedding width.
struct ModelVariant {
  std::string_view name;
  Direction direction;
  std::size_t num_layers;
  std::size_t embedding_dim;
  std::string_view embedding_source;
};

const std::array<ModelVariant, 5>& model_variants() noexcept;

/// "model1" .. "model5", case-insensitive.
std::optional<ModelVariant> find_variant(std::string_view name) noexcept;

/// Applies a variant's topology to `base` and sets input_dim from its
/// embedding width.
ModelConfig apply_variant(ModelConfig base, const ModelVariant& variant) noexcept;

}  // namespace comparo
