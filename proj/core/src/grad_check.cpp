#include "comparo/grad_check.hpp"

#include <algorithm>
#include <cmath>

#include "comparo/params.hpp"
#include "comparo/rng.hpp"
#include "comparo/tagger.hpp"

namespace comparo {

double relative_error(double analytic, double numeric) noexcept {
  const double scale = std::max({std::abs(analytic), std::abs(numeric), 1e-8});
  return std::abs(analytic - numeric) / scale;
}

GradCheckResult grad_check(const ModelConfig& config, std::uint64_t seed,
                           const GradCheckOptions& options) {
  ModelConfig cfg = config;
  cfg.seed = seed;
  TaggerParams params = init_params(cfg);

  // Perturb everything, biases included, so no coordinate sits at its
  // initial symmetric value.
  Rng rng(seed + 1);
  for (auto& view : tensors(params)) {
    for (double& v : view.values) v += rng.uniform(-0.1, 0.1);
  }
  const auto T = static_cast<Eigen::Index>(options.sequence_length);
  SentenceEncoding encoding(T, static_cast<Eigen::Index>(cfg.input_dim));
  for (Eigen::Index t = 0; t < T; ++t) {
    for (Eigen::Index k = 0; k < encoding.cols(); ++k) encoding(t, k) = rng.uniform(-1.0, 1.0);
  }
  std::vector<Label> gold;
  for (Eigen::Index t = 0; t < T; ++t) gold.push_back(label_from_index(rng.index(kNumLabels)));

  TaggerParams analytic = backward(encoding, gold, params, cfg);
  if (options.corrupt_gradient) {
    analytic.head_b[0] += 1e-2;
  }

  GradCheckResult result;
  auto param_views = tensors(params);
  const auto grad_views = tensors(std::as_const(analytic));
  for (std::size_t k = 0; k < param_views.size(); ++k) {
    auto values = param_views[k].values;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double original = values[i];
      values[i] = original + options.epsilon;
      const double plus = loss(forward(encoding, params, cfg), gold);
      values[i] = original - options.epsilon;
      const double minus = loss(forward(encoding, params, cfg), gold);
      values[i] = original;

      const double numeric = (plus - minus) / (2.0 * options.epsilon);
      const double error = relative_error(grad_views[k].values[i], numeric);
      ++result.coordinates;
      if (error > result.max_relative_error || result.worst_tensor.empty()) {
        result.max_relative_error = error;
        result.worst_tensor = param_views[k].name;
        result.worst_index = i;
      }
    }
  }
  return result;
}

}  // namespace comparo
