#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "comparo/model_config.hpp"
#include "comparo/params.hpp"

namespace comparo {

// Checkpoint layout, all integers and reals little-endian:
//
//   bytes 0-3   magic "CMPO"
//   byte  4     format version (kCheckpointVersion)
//   byte  5     direction (0 unidirectional, 1 bidirectional)
//   byte  6     clip flag (0 off, 1 on)
//   byte  7     reserved, 0
//   u64         num_layers, input_dim, hidden_dim, num_classes, epochs, seed
//   f64         learning_rate, clip_norm (0 when off)
//   f64 * N     tensors in tensors() order, each matrix column-major
inline constexpr std::uint8_t kCheckpointVersion = 1;
inline constexpr std::size_t kCheckpointVersionOffset = 4;

struct Checkpoint {
  ModelConfig config;
  TaggerParams params;
};

std::vector<std::uint8_t> save_params(const TaggerParams& params, const ModelConfig& config);

/// Throws CheckpointError on a bad magic, version mismatch, truncated
/// stream, trailing bytes or an invalid config field.
Checkpoint load_params(std::span<const std::uint8_t> bytes);

}  // namespace comparo
