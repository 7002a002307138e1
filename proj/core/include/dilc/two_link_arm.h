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

#ifndef DILC_TWO_LINK_ARM_H_
#define DILC_TWO_LINK_ARM_H_

#include <Eigen/Core>

#include "dilc/plants.h"

namespace dilc::plants {

/// Horizontal planar arm with point masses at the link tips and viscous joint
/// friction. Inputs are joint torques (N m), outputs joint angles (rad).
struct ArmParameters {
  double mass1 = 1.0;      // kg
  double mass2 = 1.0;      // kg
  double length1 = 0.5;    // m
  double length2 = 0.5;    // m
  double friction1 = 0.1;  // N m s / rad
  double friction2 = 0.1;  // N m s / rad
  double sample_time = 0.02;  // s, zero-order hold period
  int substeps = 10;          // RK4 steps per sample
};

/// State (q1, q2, dq1, dq2).
using ArmState = Eigen::Vector4d;

class TwoLinkArmPlant final : public Plant {
 public:
  explicit TwoLinkArmPlant(ArmParameters params = {});

  const ArmParameters& params() const { return params_; }

  Index channels() const override { return 2; }

  /// Starts at rest at q = 0 every trial. Throws PlantFailure if the state
  /// becomes non-finite.
  Trajectory simulate(const Trajectory& u) const override;

  Eigen::Matrix2d mass_matrix(double q2) const;
  ArmState derivative(const ArmState& x, const Eigen::Vector2d& tau) const;

  /// One sample period under constant torque.
  ArmState step(const ArmState& x, const Eigen::Vector2d& tau) const;

  double kinetic_energy(const ArmState& x) const;

 private:
  ArmParameters params_;
};

}  // namespace dilc::plants

#endif  // DILC_TWO_LINK_ARM_H_
