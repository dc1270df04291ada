#include "comparo/optimizer.hpp"

#include <cmath>

#include "comparo/errors.hpp"

namespace comparo {

OptimizerState OptimizerState::zeros_like(const TaggerParams& params) {
  OptimizerState state{params, params, 0};
  for (auto& view : tensors(state.first_moment)) std::fill(view.values.begin(), view.values.end(), 0.0);
  for (auto& view : tensors(state.second_moment)) std::fill(view.values.begin(), view.values.end(), 0.0);
  return state;
}

double global_norm(const TaggerParams& grads) {
  double sum = 0.0;
  for (const auto& view : tensors(grads)) {
    for (double g : view.values) sum += g * g;
  }
  return std::sqrt(sum);
}

double clip_global_norm(TaggerParams& grads, double max_norm) {
  const double norm = global_norm(grads);
  if (!(norm > max_norm)) return 1.0;
  const double scale = max_norm / norm;
  for (auto& view : tensors(grads)) {
    for (double& g : view.values) g *= scale;
  }
  return scale;
}

void optimizer_step(TaggerParams& params, TaggerParams grads, OptimizerState& state,
                    const ModelConfig& config) {
  if (config.clip_norm) clip_global_norm(grads, *config.clip_norm);

  auto p = tensors(params);
  const auto g = tensors(std::as_const(grads));
  auto m = tensors(state.first_moment);
  auto v = tensors(state.second_moment);
  if (g.size() != p.size() || m.size() != p.size() || v.size() != p.size()) {
    throw ShapeError("optimizer: gradient or moment layout differs from the parameters");
  }

  ++state.step;
  const double t = static_cast<double>(state.step);
  const double correction1 = 1.0 - std::pow(AdamConstants::kBeta1, t);
  const double correction2 = 1.0 - std::pow(AdamConstants::kBeta2, t);
  const double lr = config.learning_rate;

  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::size_t n = p[k].values.size();
    if (g[k].values.size() != n || m[k].values.size() != n || v[k].values.size() != n) {
      throw ShapeError("optimizer: shape mismatch in " + p[k].name);
    }
    double* param = p[k].values.data();
    const double* grad = g[k].values.data();
    double* m1 = m[k].values.data();
    double* m2 = v[k].values.data();
    for (std::size_t i = 0; i < n; ++i) {
      m1[i] = AdamConstants::kBeta1 * m1[i] + (1.0 - AdamConstants::kBeta1) * grad[i];
      m2[i] = AdamConstants::kBeta2 * m2[i] + (1.0 - AdamConstants::kBeta2) * grad[i] * grad[i];
      const double m_hat = m1[i] / correction1;
      const double v_hat = m2[i] / correction2;
      param[i] -= lr * m_hat / (std::sqrt(v_hat) + AdamConstants::kEpsilon);
    }
  }
}

}  // namespace comparo
