#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "comparo/model_config.hpp"

namespace comparo {

struct GradCheckOptions {
  std::size_t sequence_length = 5;
  double epsilon = 1e-5;
  /// Test hook: perturbs the analytic gradient so the check must fail.
  bool corrupt_gradient = false;
};

struct GradCheckResult {
  double max_relative_error = 0.0;
  std::string worst_tensor;
  std::size_t worst_index = 0;
  std::size_t coordinates = 0;
};

inline constexpr double kGradCheckTolerance = 1e-4;

/// |a - n| / max(|a|, |n|, 1e-8).
double relative_error(double analytic, double numeric) noexcept;

/// Compares backpropagated gradients with central differences on a random
/// sentence, random gold labels and randomly perturbed parameters drawn
/// from `seed`.
GradCheckResult grad_check(const ModelConfig& config, std::uint64_t seed,
                           const GradCheckOptions& options = {});

}  // namespace comparo
