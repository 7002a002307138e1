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

#include "dilc/superposition.h"

#include <stdexcept>
#include <utility>
#include <vector>

namespace dilc {

SuperpositionGrid::SuperpositionGrid(Index rows, Index cols, Index samples)
    : rows_(rows),
      cols_(cols),
      samples_(samples),
      sequences_(rows * cols, Eigen::VectorXd::Zero(samples)) {}

ToeplitzOperator SuperpositionGrid::sub_block(Index k, Index i) const {
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(samples_);
  for (Index n = 0; n < samples_; ++n) {
    blocks.emplace_back(Eigen::MatrixXd::Constant(1, 1, sequence(k, i)(n)));
  }
  return ToeplitzOperator(std::move(blocks));
}

Eigen::MatrixXd scalar_toeplitz_dense(const Eigen::VectorXd& sequence) {
  const Index n = sequence.size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (Index c = 0; c < n; ++c) {
    out.col(c).tail(n - c) = sequence.head(n - c);
  }
  return out;
}

Eigen::MatrixXd SuperpositionGrid::row_stack(Index k) const {
  std::vector<Index> kept;
  for (Index i = 0; i < cols_; ++i) {
    if (!is_zero(k, i)) kept.push_back(i);
  }
  Eigen::MatrixXd out(samples_, samples_ * static_cast<Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) {
    out.middleCols(static_cast<Index>(j) * samples_, samples_) =
        scalar_toeplitz_dense(sequence(k, kept[j]));
  }
  return out;
}

Eigen::MatrixXd SuperpositionGrid::column_stack(Index i) const {
  std::vector<Index> kept;
  for (Index k = 0; k < rows_; ++k) {
    if (!is_zero(k, i)) kept.push_back(k);
  }
  Eigen::MatrixXd out(samples_ * static_cast<Index>(kept.size()), samples_);
  for (std::size_t j = 0; j < kept.size(); ++j) {
    out.middleRows(static_cast<Index>(j) * samples_, samples_) =
        scalar_toeplitz_dense(sequence(kept[j], i));
  }
  return out;
}

Eigen::MatrixXd SuperpositionGrid::dense() const {
  Eigen::MatrixXd out(rows_ * samples_, cols_ * samples_);
  for (Index k = 0; k < rows_; ++k) {
    for (Index i = 0; i < cols_; ++i) {
      out.block(k * samples_, i * samples_, samples_, samples_) =
          scalar_toeplitz_dense(sequence(k, i));
    }
  }
  return out;
}

ToeplitzOperator SuperpositionGrid::recompose() const {
  std::vector<Eigen::MatrixXd> blocks(samples_,
                                      Eigen::MatrixXd::Zero(rows_, cols_));
  for (Index n = 0; n < samples_; ++n) {
    for (Index k = 0; k < rows_; ++k) {
      for (Index i = 0; i < cols_; ++i) blocks[n](k, i) = sequence(k, i)(n);
    }
  }
  return ToeplitzOperator(std::move(blocks));
}

namespace {

SuperpositionGrid regroup(const ToeplitzOperator& op) {
  SuperpositionGrid grid(op.block_rows(), op.block_cols(), op.horizon());
  for (Index n = 0; n < op.horizon(); ++n) {
    const auto& b = op.block(n);
    for (Index k = 0; k < op.block_rows(); ++k) {
      for (Index i = 0; i < op.block_cols(); ++i) grid.sequence(k, i)(n) = b(k, i);
    }
  }
  return grid;
}

}  // namespace

SuperpositionGrid superposition_blocks(const ToeplitzOperator& op) {
  if (!op.square_blocks()) {
    throw std::invalid_argument("superposition_blocks: blocks must be square");
  }
  return regroup(op);
}

SuperpositionGrid superposition_input_blocks(const LiftedInputMatrix& lifted) {
  return regroup(lifted.op());
}

}  // namespace dilc
