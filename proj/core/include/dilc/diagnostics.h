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

#ifndef DILC_DIAGNOSTICS_H_
#define DILC_DIAGNOSTICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "dilc/design_laws.h"
#include "dilc/dual_learning.h"
#include "dilc/lifting.h"

namespace dilc::learning {

inline constexpr double kRankTolerance = 1e-10;
inline constexpr double kContractionSlack = 1e-9;
inline constexpr double kMonotoneSlack = 1e-10;

struct ExcitationVerdict {
  bool excited = false;
  Index rank = 0;
};

/// Rank test on the first input samples of O consecutive trials. Singular
/// values count when above `relative_tolerance` times the largest one.
/// Requires exactly O vectors of length O.
ExcitationVerdict check_excitation(std::span<const Eigen::VectorXd> samples,
                                   double relative_tolerance = kRankTolerance);

/// Numerical rank of the matrix whose columns are `samples` (any count).
Index first_sample_rank(std::span<const Eigen::VectorXd> samples,
                        double relative_tolerance = kRankTolerance);

struct ModelContraction {
  double norm = 0.0;                // |I - L^ U|
  bool within_bound = false;        // norm <= 1 + kContractionSlack
  bool gain_full_column_rank = false;
};

ModelContraction check_model_contraction(const design::LearningGain& gain,
                                         const LiftedInputMatrix& lifted);

/// Same as check_model_contraction().norm, skipping the rank test.
double model_contraction_norm(const design::LearningGain& gain,
                              const LiftedInputMatrix& lifted);

struct PredictionContraction {
  double gamma = 0.0;  // |I - U L^|
  bool contracting = false;
};

PredictionContraction check_prediction_contraction(
    const design::LearningGain& gain, const LiftedInputMatrix& lifted);

/// |p - m|.
double model_error_norm(const ModelVector& m, const ModelVector& truth);

struct DiagnosticReport {
  std::size_t trials = 0;
  /// Per O-window verdicts, window w covering trials [w, w + O - 1].
  std::vector<ExcitationVerdict> excitation_windows;
  std::size_t excitation_failures = 0;
  std::size_t contraction_violations = 0;
  std::size_t contracting_prediction_trials = 0;
  /// First trial from which |e_j| never increases again (slack
  /// kMonotoneSlack). Unset when the last step still increases.
  std::optional<std::size_t> threshold_trial;
  std::optional<std::size_t> model_error_increases;
  double final_normalized_error = 0.0;
};

/// Evaluates all conditions from logged records alone.
DiagnosticReport analyze_trials(std::span<const TrialRecord> records);

/// Threshold-trial estimate from a tracking-error norm sequence.
std::optional<std::size_t> threshold_trial(std::span<const double> norms,
                                           double slack = kMonotoneSlack);

}  // namespace dilc::learning

#endif  // DILC_DIAGNOSTICS_H_
