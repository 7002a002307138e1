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

#include "dilc/trajectory.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace dilc {

Trajectory::Trajectory(Index channels, Index samples)
    : data_(Eigen::VectorXd::Zero(channels * samples)),
      channels_(channels),
      samples_(samples) {
  if (channels <= 0 || samples <= 0) {
    throw std::invalid_argument("Trajectory: channels and samples must be positive");
  }
}

Trajectory::Trajectory(Eigen::VectorXd data, Index channels)
    : data_(std::move(data)), channels_(channels) {
  if (channels <= 0 || data_.size() == 0 || data_.size() % channels != 0) {
    throw std::invalid_argument("Trajectory: length " +
                                std::to_string(data_.size()) +
                                " is not a positive multiple of " +
                                std::to_string(channels));
  }
  samples_ = data_.size() / channels;
}

namespace {

void require_same_shape(const Trajectory& a, const Trajectory& b) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument("Trajectory: shape mismatch");
  }
}

}  // namespace

Trajectory operator+(const Trajectory& a, const Trajectory& b) {
  require_same_shape(a, b);
  return Trajectory(a.data() + b.data(), a.channels());
}

Trajectory operator-(const Trajectory& a, const Trajectory& b) {
  require_same_shape(a, b);
  return Trajectory(a.data() - b.data(), a.channels());
}

Trajectory operator*(double scale, const Trajectory& a) {
  return Trajectory(scale * a.data(), a.channels());
}

ModelVector::ModelVector(Index channels, Index samples)
    : data_(Eigen::VectorXd::Zero(channels * channels * samples)),
      channels_(channels),
      samples_(samples) {
  if (channels <= 0 || samples <= 0) {
    throw std::invalid_argument("ModelVector: channels and samples must be positive");
  }
}

ModelVector::ModelVector(Eigen::VectorXd data, Index channels, Index samples)
    : data_(std::move(data)), channels_(channels), samples_(samples) {
  if (channels <= 0 || samples <= 0 ||
      data_.size() != channels * channels * samples) {
    throw std::invalid_argument(
        "ModelVector: length " + std::to_string(data_.size()) +
        " does not match O^2 N = " +
        std::to_string(channels * channels * samples));
  }
}

}  // namespace dilc
