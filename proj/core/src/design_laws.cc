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

#include "dilc/design_laws.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "dilc/superposition.h"

namespace dilc::design {

namespace {

void require_size(const Eigen::VectorXd& v, Index expected, const char* what) {
  if (v.size() != expected) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(expected) + " entries, got " +
                                std::to_string(v.size()));
  }
}

void require_positive(const Eigen::VectorXd& v, const char* what) {
  if (!(v.array() > 0.0).all() || !v.allFinite()) {
    throw std::invalid_argument(std::string(what) +
                                ": weights must be finite and positive");
  }
}

Eigen::LLT<Eigen::MatrixXd> factorize(const Eigen::MatrixXd& a,
                                      const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw GainDesignError(std::string(what) +
                          ": system matrix is not positive definite");
  }
  return llt;
}

struct StackNorms {
  Eigen::VectorXd rows;  // one per row channel
  Eigen::VectorXd cols;  // one per column channel
};

StackNorms stack_norms(const SuperpositionGrid& grid,
                       const SelfParamOptions& options) {
  StackNorms out{Eigen::VectorXd(grid.rows()), Eigen::VectorXd(grid.cols())};
  for (Index k = 0; k < grid.rows(); ++k) {
    out.rows(k) = std::max(matrix_norm(grid.row_stack(k), options.norm),
                           options.norm_floor);
  }
  for (Index i = 0; i < grid.cols(); ++i) {
    out.cols(i) = std::max(matrix_norm(grid.column_stack(i), options.norm),
                           options.norm_floor);
  }
  return out;
}

// Per-channel values repeated over the N samples of the lifted layout.
Eigen::VectorXd replicate(const Eigen::VectorXd& per_channel, Index samples) {
  return per_channel.replicate(samples, 1);
}

WeightingSet gradient_weights(const SuperpositionGrid& grid,
                              const SelfParamOptions& options) {
  const StackNorms norms = stack_norms(grid, options);
  return {replicate(norms.rows.array().square().inverse().matrix(),
                    grid.samples()),
          Eigen::VectorXd()};
}

WeightingSet norm_optimal_weights(const SuperpositionGrid& grid,
                                  const SelfParamOptions& options) {
  const StackNorms norms = stack_norms(grid, options);
  return {replicate(norms.rows.array().inverse().matrix(), grid.samples()),
          replicate(norms.cols, grid.samples())};
}

}  // namespace

double matrix_norm(const Eigen::MatrixXd& a, NormKind kind) {
  if (a.size() == 0) return 0.0;
  if (kind == NormKind::kFrobenius) return a.norm();
  // Largest eigenvalue of the smaller Gram matrix.
  const Eigen::MatrixXd gram =
      a.rows() <= a.cols() ? Eigen::MatrixXd(a * a.transpose())
                           : Eigen::MatrixXd(a.transpose() * a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(solver.eigenvalues().maxCoeff(), 0.0));
}

LearningGain design_gilc(const ToeplitzOperator& model,
                         const Eigen::VectorXd& w) {
  if (!model.square_blocks()) {
    throw std::invalid_argument("design_gilc: model blocks must be square");
  }
  require_size(w, model.rows(), "design_gilc");
  return {model.dense().transpose() * w.asDiagonal()};
}

LearningGain design_noilc(const ToeplitzOperator& model,
                          const Eigen::VectorXd& q, const Eigen::VectorXd& s) {
  if (!model.square_blocks()) {
    throw std::invalid_argument("design_noilc: model blocks must be square");
  }
  require_size(q, model.rows(), "design_noilc (Q)");
  require_size(s, model.cols(), "design_noilc (S)");
  require_positive(q, "design_noilc (Q)");
  require_positive(s, "design_noilc (S)");
  const Eigen::MatrixXd m = model.dense();
  const Eigen::MatrixXd mt_q = m.transpose() * q.asDiagonal();
  Eigen::MatrixXd system = mt_q * m;
  system.diagonal() += s;
  return {factorize(system, "design_noilc").solve(mt_q)};
}

LearningGain design_giml(const LiftedInputMatrix& lifted,
                         const Eigen::VectorXd& w) {
  require_size(w, lifted.op().rows(), "design_giml");
  return {lifted.dense().transpose() * w.asDiagonal()};
}

LearningGain design_noiml(const LiftedInputMatrix& lifted,
                          const Eigen::VectorXd& q, const Eigen::VectorXd& s) {
  require_size(q, lifted.op().rows(), "design_noiml (Q)");
  require_size(s, lifted.op().cols(), "design_noiml (S)");
  require_positive(q, "design_noiml (Q)");
  require_positive(s, "design_noiml (S)");
  // (U^T Q U + S)^-1 U^T Q == S^-1 U^T (U S^-1 U^T + Q^-1)^-1. Output channel
  // i only sees the parameters of model row i, so U S^-1 U^T splits into O
  // independent N x N systems.
  const Index o = lifted.channels();
  const Index n = lifted.samples();
  const Eigen::MatrixXd u = lifted.dense();
  Eigen::MatrixXd gain = Eigen::MatrixXd::Zero(u.cols(), u.rows());
  std::vector<Index> rows(n), cols(o * n);
  for (Index i = 0; i < o; ++i) {
    for (Index k = 0; k < n; ++k) {
      rows[k] = k * o + i;
      for (Index j = 0; j < o; ++j) cols[k * o + j] = k * o * o + i * o + j;
    }
    const Eigen::MatrixXd ui = u(rows, cols);
    const Eigen::MatrixXd ui_sinv = ui * s(cols).cwiseInverse().asDiagonal();
    Eigen::MatrixXd system = ui_sinv * ui.transpose();
    system.diagonal() += q(rows).cwiseInverse();
    gain(cols, rows) = factorize(system, "design_noiml").solve(ui_sinv).transpose();
  }
  return {gain};
}

WeightingSet self_parametrize_gilc(const ToeplitzOperator& model,
                                   const SelfParamOptions& options) {
  return gradient_weights(superposition_blocks(model), options);
}

WeightingSet self_parametrize_giml(const LiftedInputMatrix& lifted,
                                   const SelfParamOptions& options) {
  return gradient_weights(superposition_input_blocks(lifted), options);
}

WeightingSet self_parametrize_noilc(const ToeplitzOperator& model,
                                    const SelfParamOptions& options) {
  return norm_optimal_weights(superposition_blocks(model), options);
}

WeightingSet self_parametrize_noiml(const LiftedInputMatrix& lifted,
                                    const SelfParamOptions& options) {
  return norm_optimal_weights(superposition_input_blocks(lifted), options);
}

LearningGain design_ilc_gain(Design design, const ToeplitzOperator& model,
                             const SelfParamOptions& options) {
  if (design == Design::kGradient) {
    return design_gilc(model, self_parametrize_gilc(model, options).error_weight);
  }
  const WeightingSet w = self_parametrize_noilc(model, options);
  return design_noilc(model, w.error_weight, w.step_penalty);
}

LearningGain design_iml_gain(Design design, const LiftedInputMatrix& lifted,
                             const SelfParamOptions& options) {
  if (design == Design::kGradient) {
    return design_giml(lifted,
                       self_parametrize_giml(lifted, options).error_weight);
  }
  const WeightingSet w = self_parametrize_noiml(lifted, options);
  return design_noiml(lifted, w.error_weight, w.step_penalty);
}

std::string_view to_string(Design design) {
  return design == Design::kGradient ? "gradient" : "norm-optimal";
}

std::string_view to_string(NormKind kind) {
  return kind == NormKind::kSpectral ? "spectral" : "frobenius";
}

}  // namespace dilc::design
