#pragma once

#include <Eigen/Core>

#include "comparo/params.hpp"

namespace comparo {

/// Everything one LSTM step computes, kept for backpropagation.
struct LstmStep {
  Eigen::VectorXd input_gate;
  Eigen::VectorXd forget_gate;
  Eigen::VectorXd candidate;
  Eigen::VectorXd output_gate;
  Eigen::VectorXd c;
  Eigen::VectorXd tanh_c;
  Eigen::VectorXd h;
};

/// i = s(W_i x + U_i h + b_i), f = s(W_f x + U_f h + b_f),
/// g = tanh(W_g x + U_g h + b_g), o = s(W_o x + U_o h + b_o),
/// c = f * c_prev + i * g, h = o * tanh(c).
/// Throws ShapeError when the vector sizes do not fit `params`.
LstmStep lstm_step(const Eigen::Ref<const Eigen::VectorXd>& x,
                   const Eigen::Ref<const Eigen::VectorXd>& h_prev,
                   const Eigen::Ref<const Eigen::VectorXd>& c_prev, const LstmCellParams& params);

struct CellState {
  Eigen::VectorXd h;
  Eigen::VectorXd c;
};

CellState lstm_cell_forward(const Eigen::Ref<const Eigen::VectorXd>& x,
                            const Eigen::Ref<const Eigen::VectorXd>& h_prev,
                            const Eigen::Ref<const Eigen::VectorXd>& c_prev,
                            const LstmCellParams& params);

}  // namespace comparo
