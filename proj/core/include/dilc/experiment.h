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

#ifndef DILC_EXPERIMENT_H_
#define DILC_EXPERIMENT_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "dilc/config.h"
#include "dilc/dual_learning.h"
#include "dilc/plants.h"

namespace dilc::harness {

inline constexpr const char* kTrialLogName = "trials.csv";
inline constexpr const char* kConfigEchoName = "config.json";
inline constexpr const char* kPlotDataName = "normalized_error.csv";

struct RunSummary {
  std::size_t trials_completed = 0;
  double final_normalized_error = 0.0;
  std::optional<std::size_t> threshold_trial;
  std::size_t condition_violations = 0;
};

struct RunArtifacts {
  std::filesystem::path trial_log;
  std::filesystem::path config_echo;
  RunSummary summary;
  /// Plant failure message; the log then holds the completed trials.
  std::optional<std::string> failure;
};

/// Plant described by the config; random plants are drawn from the plant seed.
std::shared_ptr<const plants::Plant> make_plant(const ExperimentConfig& config);

/// Learning options derived from the config and root seed.
learning::DilcOptions make_dilc_options(const ExperimentConfig& config);

/// Runs the experiment and writes config echo and trial log into
/// config.output_dir. Throws IoError when files cannot be written.
RunArtifacts run_experiment(const ExperimentConfig& config);

/// Writes "trial,normalized_error" rows (no header) next to the trial log.
/// Throws IoError when the log is missing or unreadable.
std::filesystem::path emit_plot_data(const RunArtifacts& artifacts);

}  // namespace dilc::harness

#endif  // DILC_EXPERIMENT_H_
