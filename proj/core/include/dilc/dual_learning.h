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

#ifndef DILC_DUAL_LEARNING_H_
#define DILC_DUAL_LEARNING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dilc/design_laws.h"
#include "dilc/lifting.h"
#include "dilc/toeplitz.h"
#include "dilc/trajectory.h"

namespace dilc::learning {

using design::Design;
using design::SelfParamOptions;

struct ImlState {
  ModelVector model;
  std::size_t trial = 0;
};

struct IlcState {
  Trajectory input;
  Trajectory reference;
  std::size_t trial = 0;
};

/// e^ = y - U m.
Trajectory prediction_error(const ModelVector& m, const Trajectory& y,
                            const Trajectory& u);

/// e = r - y.
Trajectory tracking_error(const Trajectory& r, const Trajectory& y);

/// m+ = m + L^ e^(y, u), L^ the self-parametrized gain for lift_input(u).
ImlState iml_step(const ImlState& state, const Trajectory& u,
                  const Trajectory& y, Design design,
                  const SelfParamOptions& options = {});

/// u+ = u + L e, L the self-parametrized gain for `model`.
IlcState ilc_step(const IlcState& state, const Trajectory& e,
                  const ToeplitzOperator& model, Design design,
                  const SelfParamOptions& options = {});

/// One experiment on the system under learning.
class TrialExecutor {
 public:
  virtual ~TrialExecutor() = default;

  virtual Index channels() const = 0;

  /// Runs trial `trial` with input `u` and returns the measured output.
  /// Implementations signal failure by throwing.
  virtual Trajectory execute(const Trajectory& u, std::size_t trial) = 0;

  /// Lifted true plant parameters, when the executor knows them.
  virtual std::optional<ModelVector> true_parameters(Index samples) const {
    (void)samples;
    return std::nullopt;
  }
};

struct TrialRecord {
  std::size_t trial = 0;
  Trajectory input;   // u_j
  Trajectory output;  // y_j
  Trajectory error;   // e_j
  ModelVector model;  // m_j, the model before this trial's update
  double tracking_error_norm = 0.0;
  double normalized_error_norm = 0.0;
  /// |e^_j(y_j, u_j)|, the current model's prediction error on this trial.
  double prediction_error_norm = 0.0;
  /// |p - m_j|; only with ground truth.
  std::optional<double> model_error_norm;
  /// |I - L^_j U_j|, absent when contraction diagnostics are disabled.
  std::optional<double> iml_contraction_norm;
  bool iml_contraction_ok = true;
  std::optional<double> prediction_gamma;
  /// Rank of the first input samples over the trailing window of up to O
  /// trials ending at this one.
  Index pe_window_rank = 0;
};

struct DilcOptions {
  Design iml_design = Design::kNormOptimal;
  Design ilc_design = Design::kNormOptimal;
  SelfParamOptions self_param;
  /// Standard deviation of the zero-mean normal initial input.
  double initial_input_stddev = 0.01;
  std::uint64_t seed = 0;
  /// Dense |I - L^U| and |I - UL^| per trial. Costly for large O*N.
  bool contraction_diagnostics = true;
  /// Dither added to the next input when the trailing excitation window is
  /// rank deficient; 0 disables it.
  double excitation_dither = 0.0;
  /// Overrides the random initial input when set.
  std::optional<Trajectory> initial_input;
  /// Initial model; zero when unset.
  std::optional<ModelVector> initial_model;
};

struct DilcResult {
  std::vector<TrialRecord> records;
  Trajectory final_input;
  ModelVector final_model;
  /// Set when the executor threw; `records` then holds every completed trial.
  std::optional<std::string> failure;
};

/// Runs `trials` iterations of dual learning: experiment, model update from
/// (u_j, y_j), control gain from the updated model, input update.
DilcResult dilc_run(TrialExecutor& plant, const Trajectory& reference,
                    std::size_t trials, const DilcOptions& options);

}  // namespace dilc::learning

#endif  // DILC_DUAL_LEARNING_H_
