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

#ifndef DILC_LIFTING_H_
#define DILC_LIFTING_H_

#include "dilc/toeplitz.h"
#include "dilc/trajectory.h"

namespace dilc {

/// Toeplitz operator with O x O^2 blocks, block n equal to kron(I_O, u(n)^T).
/// Applying it to a model vector m gives the same output as applying the
/// unlifted model to u.
class LiftedInputMatrix {
 public:
  LiftedInputMatrix() = default;

  const ToeplitzOperator& op() const { return op_; }
  Index channels() const { return op_.block_rows(); }
  Index samples() const { return op_.horizon(); }

  /// The trajectory the matrix was lifted from, read back off the blocks.
  Trajectory input() const;

  Eigen::MatrixXd dense() const { return op_.dense(); }

 private:
  friend LiftedInputMatrix lift_input(const Trajectory& u);
  explicit LiftedInputMatrix(ToeplitzOperator op) : op_(std::move(op)) {}

  ToeplitzOperator op_;
};

LiftedInputMatrix lift_input(const Trajectory& u);

/// Row-major vectorization of each block. Throws std::invalid_argument for
/// non-square blocks.
ModelVector lift_model(const ToeplitzOperator& model);

/// Exact inverse of lift_model.
ToeplitzOperator unlift_model(const ModelVector& m);

/// y = T u. Requires square blocks matching u's channel count.
Trajectory apply_operator(const ToeplitzOperator& op, const Trajectory& u);

/// Prediction U m.
Trajectory apply_operator(const LiftedInputMatrix& lifted,
                          const ModelVector& m);

}  // namespace dilc

#endif  // DILC_LIFTING_H_
