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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dilc/plants.h"

namespace dilc::plants {

Trajectory reference_library(std::string_view name, Index channels,
                             Index samples, double amplitude) {
  if (channels <= 0 || samples <= 0) {
    throw std::invalid_argument("reference_library: channels and samples must be positive");
  }
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  Eigen::VectorXd data = Eigen::VectorXd::Zero(channels * samples);
  auto at = [&](Index n, Index k) -> double& { return data(n * channels + k); };

  if (name == "zero") {
    // nothing to fill
  } else if (name == "sine") {
    for (Index k = 0; k < channels; ++k) {
      const double phase = static_cast<double>(k) * std::numbers::pi / 2.0;
      for (Index n = 0; n < samples; ++n) {
        const double t = static_cast<double>(n) / static_cast<double>(samples);
        at(n, k) = amplitude * (std::sin(kTwoPi * t + phase) - std::sin(phase));
      }
    }
  } else if (name == "multisine") {
    for (Index k = 0; k < channels; ++k) {
      const double phase = static_cast<double>(k) * std::numbers::pi / 3.0;
      for (Index n = 0; n < samples; ++n) {
        const double t = static_cast<double>(n) / static_cast<double>(samples);
        at(n, k) = amplitude *
                   (std::sin(kTwoPi * t + phase) - std::sin(phase) +
                    0.5 * (std::sin(2.0 * kTwoPi * t + 2.0 * phase) -
                           std::sin(2.0 * phase)));
      }
    }
  } else if (name == "step") {
    const Index rise = std::max<Index>(1, samples / 4);
    const Index fall = std::max<Index>(rise + 1, (3 * samples) / 4);
    for (Index k = 0; k < channels; ++k) {
      const double level = (k % 2 == 0 ? 1.0 : -1.0) * amplitude;
      for (Index n = rise; n < std::min(fall, samples); ++n) at(n, k) = level;
    }
  } else {
    throw std::invalid_argument("reference_library: unknown reference '" +
                                std::string(name) + "'");
  }
  return Trajectory(std::move(data), channels);
}

}  // namespace dilc::plants
