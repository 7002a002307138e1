// Copyright 2026 The DILC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dilc/lifting.h"

#include <stdexcept>
#include <utility>
#include <vector>

namespace dilc {

LiftedInputMatrix lift_input(const Trajectory& u) {
  const Index o = u.channels();
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(u.samples());
  for (Index n = 0; n < u.samples(); ++n) {
    // kron(I_O, u(n)^T): row k carries u(n)^T in columns [k O, (k + 1) O).
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(o, o * o);
    for (Index k = 0; k < o; ++k) {
      block.block(k, k * o, 1, o) = u.sample(n).transpose();
    }
    blocks.push_back(std::move(block));
  }
  return LiftedInputMatrix(ToeplitzOperator(std::move(blocks)));
}

Trajectory LiftedInputMatrix::input() const {
  const Index o = channels();
  Eigen::VectorXd data(o * samples());
  for (Index n = 0; n < samples(); ++n) {
    data.segment(n * o, o) = op_.block(n).block(0, 0, 1, o).transpose();
  }
  return Trajectory(std::move(data), o);
}

ModelVector lift_model(const ToeplitzOperator& model) {
  if (!model.square_blocks()) {
    throw std::invalid_argument("lift_model: blocks must be square");
  }
  const Index o = model.block_rows();
  Eigen::VectorXd data(o * o * model.horizon());
  for (Index n = 0; n < model.horizon(); ++n) {
    const auto& b = model.block(n);
    for (Index k = 0; k < o; ++k) {
      for (Index l = 0; l < o; ++l) data(n * o * o + k * o + l) = b(k, l);
    }
  }
  return ModelVector(std::move(data), o, model.horizon());
}

ToeplitzOperator unlift_model(const ModelVector& m) {
  const Index o = m.channels();
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(m.samples());
  for (Index n = 0; n < m.samples(); ++n) {
    Eigen::MatrixXd b(o, o);
    for (Index k = 0; k < o; ++k) {
      for (Index l = 0; l < o; ++l) b(k, l) = m.data()(n * o * o + k * o + l);
    }
    blocks.push_back(std::move(b));
  }
  return ToeplitzOperator(std::move(blocks));
}

Trajectory apply_operator(const ToeplitzOperator& op, const Trajectory& u) {
  if (op.block_cols() != u.channels() || op.horizon() != u.samples()) {
    throw std::invalid_argument("apply_operator: operator and trajectory shapes differ");
  }
  return Trajectory(op.apply(u.data()), op.block_rows());
}

Trajectory apply_operator(const LiftedInputMatrix& lifted,
                          const ModelVector& m) {
  if (lifted.channels() != m.channels() || lifted.samples() != m.samples()) {
    throw std::invalid_argument("apply_operator: input matrix and model shapes differ");
  }
  return Trajectory(lifted.op().apply(m.data()), lifted.channels());
}

}  // namespace dilc
