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

#ifndef DILC_CONFIG_H_
#define DILC_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "dilc/design_laws.h"
#include "dilc/two_link_arm.h"

namespace dilc::harness {

/// Environment variable that overrides the configured output directory. The
/// --out command-line flag still takes precedence over it.
inline constexpr const char* kOutputDirEnv = "DILC_OUTPUT_DIR";

/// Invalid or unparseable configuration. field() names the offending key in
/// dotted form, or is empty for whole-document errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct PlantSpec {
  /// "random_lti" or "two_link_arm".
  std::string name;
  /// Plant generator seed; derived from the root seed when unset.
  std::optional<std::uint64_t> seed;
  Index state_dim = 4;
  double spectral_radius = 0.9;
  plants::ArmParameters arm;
};

struct ReferenceSpec {
  std::string name;
  double amplitude = 1.0;
};

struct ExperimentConfig {
  PlantSpec plant;
  ReferenceSpec reference;
  Index channels = 2;
  Index samples = 20;
  std::size_t trials = 1;
  design::Design iml_design = design::Design::kNormOptimal;
  design::Design ilc_design = design::Design::kNormOptimal;
  design::NormKind norm = design::NormKind::kSpectral;
  double norm_floor = 1e-8;
  double initial_input_stddev = 0.01;
  double noise_sigma = 1e-5;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "dilc_out";
  bool contraction_diagnostics = true;
  double excitation_dither = 0.0;
};

/// Parses a JSON object. Keys are flat and dotted ("plant.name"); nested
/// objects are accepted and flattened to the same keys. Required keys:
/// plant.name, reference.name, trials. Unknown keys are rejected.
ExperimentConfig parse_config_text(std::string_view json_text);

/// Reads and parses a config file. Throws ConfigError.
ExperimentConfig parse_config(const std::filesystem::path& path);

/// Throws ConfigError naming the first invalid field.
void validate(const ExperimentConfig& config);

/// Flat JSON echo of a resolved config; parses back to the same config.
std::string to_json(const ExperimentConfig& config);

/// "gg", "gno", "nog" or "nono": model-learning design first, then control.
std::pair<design::Design, design::Design> parse_design_pair(
    std::string_view name);
std::string design_pair_name(design::Design iml, design::Design ilc);

}  // namespace dilc::harness

#endif  // DILC_CONFIG_H_
