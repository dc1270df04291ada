#pragma once

#include <cstdint>

#include "comparo/model_config.hpp"
#include "comparo/params.hpp"

namespace comparo {

struct AdamConstants {
  static constexpr double kBeta1 = 0.9;
  static constexpr double kBeta2 = 0.999;
  static constexpr double kEpsilon = 1e-8;
};

struct OptimizerState {
  TaggerParams first_moment;
  TaggerParams second_moment;
  std::uint64_t step = 0;

  static OptimizerState zeros_like(const TaggerParams& params);
};

double global_norm(const TaggerParams& grads);

/// Scales every gradient by max_norm / norm when the global norm exceeds
/// max_norm. Returns the factor applied (1 when untouched).
double clip_global_norm(TaggerParams& grads, double max_norm);

/// Bias-corrected Adam update of `params` in place. Gradients are clipped
/// to config.clip_norm first when it is set.
void optimizer_step(TaggerParams& params, TaggerParams grads, OptimizerState& state,
                    const ModelConfig& config);

}  // namespace comparo
