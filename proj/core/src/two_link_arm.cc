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

#include "dilc/two_link_arm.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

namespace dilc::plants {

TwoLinkArmPlant::TwoLinkArmPlant(ArmParameters params) : params_(params) {
  const auto& p = params_;
  if (!(p.mass1 > 0 && p.mass2 > 0 && p.length1 > 0 && p.length2 > 0)) {
    throw std::invalid_argument("TwoLinkArmPlant: masses and lengths must be positive");
  }
  if (p.friction1 < 0 || p.friction2 < 0) {
    throw std::invalid_argument("TwoLinkArmPlant: friction must be non-negative");
  }
  if (!(p.sample_time > 0) || p.substeps < 1) {
    throw std::invalid_argument("TwoLinkArmPlant: bad integration settings");
  }
}

Eigen::Matrix2d TwoLinkArmPlant::mass_matrix(double q2) const {
  const auto& p = params_;
  const double l1l2 = p.mass2 * p.length1 * p.length2 * std::cos(q2);
  const double m22 = p.mass2 * p.length2 * p.length2;
  Eigen::Matrix2d m;
  m(0, 0) = (p.mass1 + p.mass2) * p.length1 * p.length1 + m22 + 2.0 * l1l2;
  m(0, 1) = m22 + l1l2;
  m(1, 0) = m(0, 1);
  m(1, 1) = m22;
  return m;
}

ArmState TwoLinkArmPlant::derivative(const ArmState& x,
                                     const Eigen::Vector2d& tau) const {
  const auto& p = params_;
  const double dq1 = x(2);
  const double dq2 = x(3);
  const double h = p.mass2 * p.length1 * p.length2 * std::sin(x(1));
  const Eigen::Vector2d coriolis(-h * (2.0 * dq1 * dq2 + dq2 * dq2),
                                 h * dq1 * dq1);
  const Eigen::Vector2d friction(p.friction1 * dq1, p.friction2 * dq2);
  const Eigen::Vector2d ddq =
      mass_matrix(x(1)).inverse() * (tau - coriolis - friction);
  ArmState dx;
  dx << dq1, dq2, ddq;
  return dx;
}

ArmState TwoLinkArmPlant::step(const ArmState& x,
                               const Eigen::Vector2d& tau) const {
  const double h = params_.sample_time / params_.substeps;
  ArmState s = x;
  for (int i = 0; i < params_.substeps; ++i) {
    const ArmState k1 = derivative(s, tau);
    const ArmState k2 = derivative(s + 0.5 * h * k1, tau);
    const ArmState k3 = derivative(s + 0.5 * h * k2, tau);
    const ArmState k4 = derivative(s + h * k3, tau);
    s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return s;
}

double TwoLinkArmPlant::kinetic_energy(const ArmState& x) const {
  const Eigen::Vector2d dq = x.tail<2>();
  return 0.5 * dq.dot(mass_matrix(x(1)) * dq);
}

Trajectory TwoLinkArmPlant::simulate(const Trajectory& u) const {
  if (u.channels() != 2) {
    throw std::invalid_argument("TwoLinkArmPlant: expects 2 input channels");
  }
  ArmState x = ArmState::Zero();
  Eigen::VectorXd y(u.size());
  for (Index n = 0; n < u.samples(); ++n) {
    x = step(x, u.sample(n));
    if (!x.allFinite()) {
      throw PlantFailure("TwoLinkArmPlant: state diverged at sample " +
                         std::to_string(n));
    }
    y.segment<2>(2 * n) = x.head<2>();
  }
  return Trajectory(std::move(y), 2);
}

}  // namespace dilc::plants
