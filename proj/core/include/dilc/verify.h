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

// Brute-force reference computations for tests and acceptance runs. Nothing
// in the learning path calls into this header; the routines here favour the
// most literal formulation over speed.

#ifndef DILC_VERIFY_H_
#define DILC_VERIFY_H_

#include <span>
#include <stdexcept>

#include <Eigen/Core>

#include "dilc/toeplitz.h"
#include "dilc/trajectory.h"

namespace dilc::verify {

using DenseMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr Index kDefaultDenseCap = 4000;
inline constexpr double kRankTolerance = 1e-10;

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Entry-by-entry expansion. Throws CapExceeded when either dimension exceeds
/// `cap`.
DenseMatrix densify(const ToeplitzOperator& op, Index cap = kDefaultDenseCap);

/// argmin_m |y - U m|^2_W + |m - m_prev|^2_S via the dense normal equations
/// (U^T W U + S) m = U^T W y + S m_prev. W and S are given as diagonals.
Eigen::VectorXd regularized_ls_oracle(const Eigen::MatrixXd& u_dense,
                                      const Eigen::VectorXd& w,
                                      const Eigen::VectorXd& s,
                                      const Eigen::VectorXd& y,
                                      const Eigen::VectorXd& m_prev);

/// Largest singular value from a full SVD.
double spectral_norm(const Eigen::MatrixXd& a);

/// Largest singular value by power iteration on A^T A; an independent
/// cross-check for spectral_norm().
double power_iteration_norm(const Eigen::MatrixXd& a, int max_iterations = 5000,
                            double tolerance = 1e-14);

/// Singular values above `relative_tolerance` times the largest one.
Index numerical_rank(const Eigen::MatrixXd& a,
                     double relative_tolerance = kRankTolerance);

/// True iff the intersection of ker(products[i]) is {0}, i.e. the stacked
/// matrix has full column rank. Each product is a dense L^_i U_i.
bool kernel_intersection_check(std::span<const Eigen::MatrixXd> products,
                               Index cap = kDefaultDenseCap);

}  // namespace dilc::verify

#endif  // DILC_VERIFY_H_
