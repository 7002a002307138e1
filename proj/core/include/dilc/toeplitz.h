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

#ifndef DILC_TOEPLITZ_H_
#define DILC_TOEPLITZ_H_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "dilc/trajectory.h"

namespace dilc {

/// Block-lower-triangular Toeplitz operator with N blocks of size L x M.
///
/// Only the N generating blocks are stored. Block-entry (r, c) of the implied
/// (L*N) x (M*N) matrix is block(r - c) for r >= c and zero otherwise.
/// Application is a block convolution and never forms the full matrix; use
/// dense() when the full matrix is genuinely needed.
class ToeplitzOperator {
 public:
  ToeplitzOperator() = default;

  /// Throws std::invalid_argument if `blocks` is empty or the blocks differ
  /// in shape.
  explicit ToeplitzOperator(std::vector<Eigen::MatrixXd> blocks);

  static ToeplitzOperator zero(Index block_rows, Index block_cols,
                               Index horizon);
  static ToeplitzOperator identity(Index channels, Index horizon);

  Index block_rows() const { return block_rows_; }
  Index block_cols() const { return block_cols_; }
  Index horizon() const { return static_cast<Index>(blocks_.size()); }
  Index rows() const { return block_rows_ * horizon(); }
  Index cols() const { return block_cols_ * horizon(); }
  bool square_blocks() const { return block_rows_ == block_cols_; }

  const Eigen::MatrixXd& block(Index n) const { return blocks_[n]; }
  std::span<const Eigen::MatrixXd> blocks() const { return blocks_; }

  /// y = T x with x of length cols(). Throws std::invalid_argument on a
  /// length mismatch. O(N^2 L M) time.
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

  /// Full (L*N) x (M*N) matrix.
  Eigen::MatrixXd dense() const;

  /// Toeplitz product; requires block_cols() == rhs.block_rows() and equal
  /// horizons. The result stays in the Toeplitz class.
  ToeplitzOperator compose(const ToeplitzOperator& rhs) const;

  friend bool operator==(const ToeplitzOperator& a, const ToeplitzOperator& b);

 private:
  std::vector<Eigen::MatrixXd> blocks_;
  Index block_rows_ = 0;
  Index block_cols_ = 0;
};

ToeplitzOperator operator+(const ToeplitzOperator& a,
                           const ToeplitzOperator& b);
ToeplitzOperator operator-(const ToeplitzOperator& a,
                           const ToeplitzOperator& b);
ToeplitzOperator operator*(double scale, const ToeplitzOperator& a);

}  // namespace dilc

#endif  // DILC_TOEPLITZ_H_
