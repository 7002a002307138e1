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

#ifndef DILC_SUPERPOSITION_H_
#define DILC_SUPERPOSITION_H_

#include <vector>

#include <Eigen/Core>

#include "dilc/lifting.h"
#include "dilc/toeplitz.h"

namespace dilc {

/// A block-Toeplitz operator regrouped by channel instead of by sample: an
/// R x C grid of scalar lower-triangular Toeplitz operators, sub-block (k, i)
/// mapping column channel i to row channel k. Sub-block (k, i) is stored as
/// its generating sequence, entry n being [T.block(n)](k, i).
class SuperpositionGrid {
 public:
  SuperpositionGrid(Index rows, Index cols, Index samples);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index samples() const { return samples_; }

  const Eigen::VectorXd& sequence(Index k, Index i) const {
    return sequences_[k * cols_ + i];
  }
  Eigen::VectorXd& sequence(Index k, Index i) {
    return sequences_[k * cols_ + i];
  }
  bool is_zero(Index k, Index i) const {
    return sequence(k, i).isZero(0.0);
  }

  /// Sub-block (k, i) as a 1 x 1-block Toeplitz operator.
  ToeplitzOperator sub_block(Index k, Index i) const;

  /// Horizontal stack [T_{k,0} ... T_{k,C-1}] of row k, N x (C*N). All-zero
  /// sub-blocks are dropped; they do not change any unitarily invariant
  /// norm of the stack.
  Eigen::MatrixXd row_stack(Index k) const;

  /// Vertical stack [T_{0,i}; ...; T_{R-1,i}] of column i, (R*N) x N, with
  /// all-zero sub-blocks dropped.
  Eigen::MatrixXd column_stack(Index i) const;

  /// Dense channel-grouped matrix, (R*N) x (C*N).
  Eigen::MatrixXd dense() const;

  /// Inverse regrouping back to the sample-grouped block operator.
  ToeplitzOperator recompose() const;

 private:
  Index rows_;
  Index cols_;
  Index samples_;
  std::vector<Eigen::VectorXd> sequences_;
};

SuperpositionGrid superposition_blocks(const ToeplitzOperator& op);

/// O x O^2 grid of the lifted input matrix.
SuperpositionGrid superposition_input_blocks(const LiftedInputMatrix& lifted);

/// Lower-triangular Toeplitz matrix with first column `sequence`.
Eigen::MatrixXd scalar_toeplitz_dense(const Eigen::VectorXd& sequence);

}  // namespace dilc

#endif  // DILC_SUPERPOSITION_H_
