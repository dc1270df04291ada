#include "comparo/lstm.hpp"

#include "comparo/errors.hpp"

namespace comparo {
namespace {

Eigen::VectorXd sigmoid(const Eigen::VectorXd& z) {
  // 1 / (1 + e^-z) overflows harmlessly to 0 for very negative z.
  return (1.0 + (-z.array()).exp()).inverse().matrix();
}

}  // namespace

LstmStep lstm_step(const Eigen::Ref<const Eigen::VectorXd>& x,
                   const Eigen::Ref<const Eigen::VectorXd>& h_prev,
                   const Eigen::Ref<const Eigen::VectorXd>& c_prev, const LstmCellParams& params) {
  const Eigen::Index H = params.U.cols();
  if (x.size() != params.W.cols() || h_prev.size() != H || c_prev.size() != H ||
      params.W.rows() != 4 * H || params.b.size() != 4 * H) {
    throw ShapeError("lstm_step: input " + std::to_string(x.size()) + ", state " +
                     std::to_string(h_prev.size()) + "/" + std::to_string(c_prev.size()) +
                     " do not fit a cell with input " + std::to_string(params.W.cols()) +
                     " and hidden " + std::to_string(H));
  }
  const Eigen::VectorXd z = params.W * x + params.U * h_prev + params.b;

  LstmStep step;
  step.input_gate = sigmoid(z.segment(0, H));
  step.forget_gate = sigmoid(z.segment(H, H));
  step.candidate = z.segment(2 * H, H).array().tanh().matrix();
  step.output_gate = sigmoid(z.segment(3 * H, H));
  step.c = step.forget_gate.cwiseProduct(c_prev) + step.input_gate.cwiseProduct(step.candidate);
  step.tanh_c = step.c.array().tanh().matrix();
  step.h = step.output_gate.cwiseProduct(step.tanh_c);
  return step;
}

CellState lstm_cell_forward(const Eigen::Ref<const Eigen::VectorXd>& x,
                            const Eigen::Ref<const Eigen::VectorXd>& h_prev,
                            const Eigen::Ref<const Eigen::VectorXd>& c_prev,
                            const LstmCellParams& params) {
  LstmStep step = lstm_step(x, h_prev, c_prev, params);
  return {std::move(step.h), std::move(step.c)};
}

}  // namespace comparo
