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

#include "dilc/toeplitz.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace dilc {

ToeplitzOperator::ToeplitzOperator(std::vector<Eigen::MatrixXd> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw std::invalid_argument("ToeplitzOperator: no blocks");
  }
  block_rows_ = blocks_.front().rows();
  block_cols_ = blocks_.front().cols();
  if (block_rows_ == 0 || block_cols_ == 0) {
    throw std::invalid_argument("ToeplitzOperator: empty block");
  }
  for (const auto& b : blocks_) {
    if (b.rows() != block_rows_ || b.cols() != block_cols_) {
      throw std::invalid_argument("ToeplitzOperator: blocks differ in shape");
    }
  }
}

ToeplitzOperator ToeplitzOperator::zero(Index block_rows, Index block_cols,
                                        Index horizon) {
  if (horizon <= 0) {
    throw std::invalid_argument("ToeplitzOperator: horizon must be positive");
  }
  return ToeplitzOperator(std::vector<Eigen::MatrixXd>(
      horizon, Eigen::MatrixXd::Zero(block_rows, block_cols)));
}

ToeplitzOperator ToeplitzOperator::identity(Index channels, Index horizon) {
  if (horizon <= 0) {
    throw std::invalid_argument("ToeplitzOperator: horizon must be positive");
  }
  auto blocks = std::vector<Eigen::MatrixXd>(
      horizon, Eigen::MatrixXd::Zero(channels, channels));
  blocks[0].setIdentity();
  return ToeplitzOperator(std::move(blocks));
}

Eigen::VectorXd ToeplitzOperator::apply(const Eigen::VectorXd& x) const {
  if (x.size() != cols()) {
    throw std::invalid_argument("ToeplitzOperator::apply: expected length " +
                                std::to_string(cols()) + ", got " +
                                std::to_string(x.size()));
  }
  const Index n_samples = horizon();
  Eigen::VectorXd y = Eigen::VectorXd::Zero(rows());
  // y_n = sum_{i <= n} block(i) x_{n - i}
  for (Index n = 0; n < n_samples; ++n) {
    auto out = y.segment(n * block_rows_, block_rows_);
    for (Index i = 0; i <= n; ++i) {
      out.noalias() += blocks_[i] * x.segment((n - i) * block_cols_, block_cols_);
    }
  }
  return y;
}

Eigen::MatrixXd ToeplitzOperator::dense() const {
  const Index n_samples = horizon();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(rows(), cols());
  for (Index r = 0; r < n_samples; ++r) {
    for (Index c = 0; c <= r; ++c) {
      out.block(r * block_rows_, c * block_cols_, block_rows_, block_cols_) =
          blocks_[r - c];
    }
  }
  return out;
}

ToeplitzOperator ToeplitzOperator::compose(const ToeplitzOperator& rhs) const {
  if (block_cols_ != rhs.block_rows_ || horizon() != rhs.horizon()) {
    throw std::invalid_argument("ToeplitzOperator::compose: shape mismatch");
  }
  std::vector<Eigen::MatrixXd> out(
      horizon(), Eigen::MatrixXd::Zero(block_rows_, rhs.block_cols_));
  for (Index n = 0; n < horizon(); ++n) {
    for (Index i = 0; i <= n; ++i) {
      out[n].noalias() += blocks_[i] * rhs.blocks_[n - i];
    }
  }
  return ToeplitzOperator(std::move(out));
}

bool operator==(const ToeplitzOperator& a, const ToeplitzOperator& b) {
  return a.block_rows_ == b.block_rows_ && a.block_cols_ == b.block_cols_ &&
         a.blocks_ == b.blocks_;
}

namespace {

template <typename Op>
ToeplitzOperator blockwise(const ToeplitzOperator& a, const ToeplitzOperator& b,
                           Op op) {
  if (a.block_rows() != b.block_rows() || a.block_cols() != b.block_cols() ||
      a.horizon() != b.horizon()) {
    throw std::invalid_argument("ToeplitzOperator: shape mismatch");
  }
  std::vector<Eigen::MatrixXd> out;
  out.reserve(a.horizon());
  for (Index n = 0; n < a.horizon(); ++n) {
    out.emplace_back(op(a.block(n), b.block(n)));
  }
  return ToeplitzOperator(std::move(out));
}

}  // namespace

ToeplitzOperator operator+(const ToeplitzOperator& a,
                           const ToeplitzOperator& b) {
  return blockwise(a, b, [](const auto& x, const auto& y) {
    return Eigen::MatrixXd(x + y);
  });
}

ToeplitzOperator operator-(const ToeplitzOperator& a,
                           const ToeplitzOperator& b) {
  return blockwise(a, b, [](const auto& x, const auto& y) {
    return Eigen::MatrixXd(x - y);
  });
}

ToeplitzOperator operator*(double scale, const ToeplitzOperator& a) {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(a.horizon());
  for (const auto& b : a.blocks()) out.emplace_back(scale * b);
  return ToeplitzOperator(std::move(out));
}

}  // namespace dilc
