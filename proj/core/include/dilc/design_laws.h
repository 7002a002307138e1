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

#ifndef DILC_DESIGN_LAWS_H_
#define DILC_DESIGN_LAWS_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "dilc/lifting.h"
#include "dilc/toeplitz.h"

namespace dilc::design {

enum class Design { kGradient, kNormOptimal };

/// Matrix norm applied to the sub-block stacks in self-parametrization.
enum class NormKind { kSpectral, kFrobenius };

struct SelfParamOptions {
  NormKind norm = NormKind::kSpectral;
  /// Stack norms are clamped to at least this value before inversion.
  double norm_floor = 1e-8;
};

/// Diagonal weightings, stored as their diagonals.
///
/// `error_weight` is W for gradient designs and Q for norm-optimal designs,
/// always of length O*N. `step_penalty` is S (O*N for control learning, O^2*N
/// for model learning) and is empty for gradient designs.
struct WeightingSet {
  Eigen::VectorXd error_weight;
  Eigen::VectorXd step_penalty;
};

/// Dense learning gain: (O*N) x (O*N) for control learning, (O^2*N) x (O*N)
/// for model learning.
struct LearningGain {
  Eigen::MatrixXd matrix;

  Eigen::VectorXd apply(const Eigen::VectorXd& error) const {
    return matrix * error;
  }
};

/// Raised when a norm-optimal system fails to factorize; with positive
/// weights this indicates non-finite inputs or a broken weighting floor.
class GainDesignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LearningGain design_gilc(const ToeplitzOperator& model,
                         const Eigen::VectorXd& w);
LearningGain design_noilc(const ToeplitzOperator& model,
                          const Eigen::VectorXd& q, const Eigen::VectorXd& s);
LearningGain design_giml(const LiftedInputMatrix& lifted,
                         const Eigen::VectorXd& w);
LearningGain design_noiml(const LiftedInputMatrix& lifted,
                          const Eigen::VectorXd& q, const Eigen::VectorXd& s);

WeightingSet self_parametrize_gilc(const ToeplitzOperator& model,
                                   const SelfParamOptions& options = {});
WeightingSet self_parametrize_giml(const LiftedInputMatrix& lifted,
                                   const SelfParamOptions& options = {});
WeightingSet self_parametrize_noilc(const ToeplitzOperator& model,
                                    const SelfParamOptions& options = {});
WeightingSet self_parametrize_noiml(const LiftedInputMatrix& lifted,
                                    const SelfParamOptions& options = {});

/// Self-parametrized control-learning gain D(M).
LearningGain design_ilc_gain(Design design, const ToeplitzOperator& model,
                             const SelfParamOptions& options = {});

/// Self-parametrized model-learning gain D^(U).
LearningGain design_iml_gain(Design design, const LiftedInputMatrix& lifted,
                             const SelfParamOptions& options = {});

/// Spectral or Frobenius norm of a dense matrix; zero for empty matrices.
double matrix_norm(const Eigen::MatrixXd& a, NormKind kind);

std::string_view to_string(Design design);
std::string_view to_string(NormKind kind);

}  // namespace dilc::design

#endif  // DILC_DESIGN_LAWS_H_
