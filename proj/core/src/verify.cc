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

#include "dilc/verify.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/SVD>

namespace dilc::verify {

DenseMatrix densify(const ToeplitzOperator& op, Index cap) {
  if (op.rows() > cap || op.cols() > cap) {
    throw CapExceeded("densify: " + std::to_string(op.rows()) + "x" +
                      std::to_string(op.cols()) + " exceeds cap " +
                      std::to_string(cap));
  }
  const Index br = op.block_rows();
  const Index bc = op.block_cols();
  DenseMatrix out(op.rows(), op.cols());
  for (Index i = 0; i < op.rows(); ++i) {
    for (Index j = 0; j < op.cols(); ++j) {
      const Index lag = i / br - j / bc;
      out(i, j) = lag < 0 ? 0.0 : op.block(lag)(i % br, j % bc);
    }
  }
  return out;
}

Eigen::VectorXd regularized_ls_oracle(const Eigen::MatrixXd& u_dense,
                                      const Eigen::VectorXd& w,
                                      const Eigen::VectorXd& s,
                                      const Eigen::VectorXd& y,
                                      const Eigen::VectorXd& m_prev) {
  if (w.size() != u_dense.rows() || y.size() != u_dense.rows() ||
      s.size() != u_dense.cols() || m_prev.size() != u_dense.cols()) {
    throw std::invalid_argument("regularized_ls_oracle: dimension mismatch");
  }
  const Eigen::MatrixXd utw = u_dense.transpose() * w.asDiagonal();
  Eigen::MatrixXd normal = utw * u_dense;
  normal.diagonal() += s;
  const Eigen::VectorXd rhs = utw * y + s.asDiagonal() * m_prev;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(normal);
  if (ldlt.info() != Eigen::Success) {
    throw std::runtime_error("regularized_ls_oracle: singular normal equations");
  }
  return ldlt.solve(rhs);
}

double spectral_norm(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  return svd.singularValues()(0);
}

double power_iteration_norm(const Eigen::MatrixXd& a, int max_iterations,
                            double tolerance) {
  if (a.size() == 0) return 0.0;
  Eigen::VectorXd v(a.cols());
  for (Index i = 0; i < v.size(); ++i) {
    v(i) = 1.0 + 0.5 * std::sin(static_cast<double>(i) + 1.0);
  }
  v.normalize();
  double estimate = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    Eigen::VectorXd next = a.transpose() * (a * v);
    const double norm = next.norm();
    if (norm == 0.0) return 0.0;
    next /= norm;
    const double updated = std::sqrt(norm);
    const bool done = std::abs(updated - estimate) <= tolerance * updated;
    estimate = updated;
    v = std::move(next);
    if (done) break;
  }
  return (a * v).norm();
}

Index numerical_rank(const Eigen::MatrixXd& a, double relative_tolerance) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0;
  return (sv.array() > relative_tolerance * sv(0)).count();
}

bool kernel_intersection_check(std::span<const Eigen::MatrixXd> products,
                               Index cap) {
  if (products.empty()) return false;
  const Index cols = products.front().cols();
  Index rows = 0;
  for (const auto& p : products) {
    if (p.cols() != cols) {
      throw std::invalid_argument("kernel_intersection_check: column mismatch");
    }
    rows += p.rows();
  }
  if (rows > cap || cols > cap) {
    throw CapExceeded("kernel_intersection_check: stacked size exceeds cap");
  }
  Eigen::MatrixXd stacked(rows, cols);
  Index offset = 0;
  for (const auto& p : products) {
    stacked.middleRows(offset, p.rows()) = p;
    offset += p.rows();
  }
  return numerical_rank(stacked) == cols;
}

}  // namespace dilc::verify
