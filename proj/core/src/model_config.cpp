#include "comparo/model_config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "comparo/preproc.hpp"

namespace comparo {

std::string_view to_string(Direction direction) noexcept {
  return direction == Direction::kBidirectional ? "bidirectional" : "unidirectional";
}

void validate(const ModelConfig& config) {
  if (config.num_layers != 1 && config.num_layers != 2) {
    throw std::invalid_argument("num_layers must be 1 or 2");
  }
  if (config.input_dim == 0) throw std::invalid_argument("input_dim must be positive");
  if (config.hidden_dim == 0) throw std::invalid_argument("hidden_dim must be positive");
  if (config.num_classes != kNumLabels) {
    throw std::invalid_argument("num_classes must be " + std::to_string(kNumLabels));
  }
  if (!(config.learning_rate > 0.0) || !std::isfinite(config.learning_rate)) {
    throw std::invalid_argument("learning_rate must be positive");
  }
  if (config.epochs == 0) throw std::invalid_argument("epochs must be positive");
  if (config.clip_norm && !(*config.clip_norm > 0.0)) {
    throw std::invalid_argument("clip_norm must be positive when set");
  }
}

const std::array<ModelVariant, 5>& model_variants() noexcept {
  static constexpr std::array<ModelVariant, 5> kVariants = {{
      {"model1", Direction::kUnidirectional, 1, 300, "Text8"},
      {"model2", Direction::kBidirectional, 1, 300, "Text8"},
      {"model3", Direction::kUnidirectional, 2, 300, "Text8"},
      {"model4", Direction::kUnidirectional, 1, 100, "Text8"},
      {"model5", Direction::kUnidirectional, 1, 100, "Electronics"},
  }};
  return kVariants;
}

std::optional<ModelVariant> find_variant(std::string_view name) noexcept {
  const std::string lowered = to_lower(name);
  for (const auto& variant : model_variants()) {
    if (variant.name == lowered) return variant;
  }
  return std::nullopt;
}

ModelConfig apply_variant(ModelConfig base, const ModelVariant& variant) noexcept {
  base.direction = variant.direction;
  base.num_layers = variant.num_layers;
  base.input_dim = variant.embedding_dim + kNumUpos;
  return base;
}

}  // namespace comparo
