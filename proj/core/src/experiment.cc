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

#include "dilc/experiment.h"

#include <fstream>
#include <system_error>
#include <vector>

#include "dilc/diagnostics.h"
#include "dilc/random.h"
#include "dilc/trial_log.h"
#include "dilc/two_link_arm.h"

namespace dilc::harness {

std::shared_ptr<const plants::Plant> make_plant(const ExperimentConfig& c) {
  if (c.plant.name == "random_lti") {
    const std::uint64_t seed =
        c.plant.seed.value_or(derive_seed(c.seed, "plant"));
    return std::make_shared<plants::StateSpacePlant>(plants::random_stable_plant(
        c.channels, c.plant.state_dim, seed, c.plant.spectral_radius));
  }
  if (c.plant.name == "two_link_arm") {
    return std::make_shared<plants::TwoLinkArmPlant>(c.plant.arm);
  }
  throw ConfigError("plant.name", "unknown plant '" + c.plant.name + "'");
}

learning::DilcOptions make_dilc_options(const ExperimentConfig& c) {
  learning::DilcOptions opts;
  opts.iml_design = c.iml_design;
  opts.ilc_design = c.ilc_design;
  opts.self_param.norm = c.norm;
  opts.self_param.norm_floor = c.norm_floor;
  opts.initial_input_stddev = c.initial_input_stddev;
  opts.seed = c.seed;
  opts.contraction_diagnostics = c.contraction_diagnostics;
  opts.excitation_dither = c.excitation_dither;
  return opts;
}

RunArtifacts run_experiment(const ExperimentConfig& config) {
  validate(config);
  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) {
    throw IoError("cannot create " + config.output_dir.string() + ": " +
                  ec.message());
  }
  RunArtifacts artifacts;
  artifacts.config_echo = config.output_dir / kConfigEchoName;
  artifacts.trial_log = config.output_dir / kTrialLogName;
  {
    std::ofstream echo(artifacts.config_echo, std::ios::binary | std::ios::trunc);
    if (!echo) throw IoError("cannot write " + artifacts.config_echo.string());
    echo << to_json(config);
    if (!echo) throw IoError("failed writing " + artifacts.config_echo.string());
  }

  plants::PlantExecutor executor(
      make_plant(config),
      plants::NoiseModel::uniform(config.channels, config.noise_sigma,
                                  derive_seed(config.seed, "noise")));
  const Trajectory reference = plants::reference_library(
      config.reference.name, config.channels, config.samples,
      config.reference.amplitude);
  const auto result = learning::dilc_run(executor, reference, config.trials,
                                         make_dilc_options(config));

  std::vector<LogRow> rows;
  rows.reserve(result.records.size());
  for (const auto& rec : result.records) rows.push_back(to_log_row(rec));
  write_trial_log(artifacts.trial_log, rows);

  const auto report = learning::analyze_trials(result.records);
  artifacts.summary.trials_completed = result.records.size();
  artifacts.summary.final_normalized_error = report.final_normalized_error;
  artifacts.summary.threshold_trial = report.threshold_trial;
  artifacts.summary.condition_violations =
      report.contraction_violations + report.excitation_failures;
  artifacts.failure = result.failure;
  return artifacts;
}

std::filesystem::path emit_plot_data(const RunArtifacts& artifacts) {
  if (!std::filesystem::exists(artifacts.trial_log)) {
    throw IoError("trial log not found: " + artifacts.trial_log.string());
  }
  std::vector<LogRow> rows;
  try {
    rows = read_trial_log(artifacts.trial_log);
  } catch (const std::invalid_argument& e) {
    throw IoError(e.what());
  }
  const auto path = artifacts.trial_log.parent_path() / kPlotDataName;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& r : rows) {
    out << r.trial << ',' << format_real(r.e_norm_normalized) << '\n';
  }
  if (!out) throw IoError("failed writing " + path.string());
  return path;
}

}  // namespace dilc::harness
