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
#include <limits>
#include <stdexcept>

#include <Eigen/LU>
#include <gtest/gtest.h>

#include "test_util.h"

namespace dilc::plants {
namespace {

TEST(TwoLinkArmTest, RestStaysAtRest) {
  TwoLinkArmPlant arm;
  EXPECT_TRUE(arm.simulate(Trajectory(2, 50)).data().isZero(0.0));
}

TEST(TwoLinkArmTest, MassMatrixClosedForm) {
  ArmParameters p;
  p.mass1 = 1.3;
  p.mass2 = 0.7;
  p.length1 = 0.6;
  p.length2 = 0.4;
  TwoLinkArmPlant arm(p);
  for (double q2 : {-2.0, 0.0, 0.4, 1.7, 3.1}) {
    const double c = std::cos(q2);
    const double m22 = 0.7 * 0.16;
    Eigen::Matrix2d want;
    want << (1.3 + 0.7) * 0.36 + m22 + 2 * 0.7 * 0.6 * 0.4 * c, m22 + 0.7 * 0.6 * 0.4 * c,
        m22 + 0.7 * 0.6 * 0.4 * c, m22;
    EXPECT_TRUE(arm.mass_matrix(q2).isApprox(want, 1e-14));
    EXPECT_GT(arm.mass_matrix(q2).determinant(), 0.0);
  }
}

// M(q) qdd + c(q, qd) + D qd = tau with c built from Christoffel symbols of a
// finite-differenced M.
TEST(TwoLinkArmTest, DerivativeSatisfiesLagrangeEquations) {
  TwoLinkArmPlant arm;
  const ArmState x(0.3, 1.1, -0.8, 2.4);
  const Eigen::Vector2d tau(0.5, -0.2);
  const ArmState dx = arm.derivative(x, tau);
  EXPECT_EQ(dx.head<2>(), x.tail<2>());

  const double h = 1e-6;
  // dM/dq1 = 0; dM/dq2 by central differences.
  const Eigen::Matrix2d dm2 =
      (arm.mass_matrix(x(1) + h) - arm.mass_matrix(x(1) - h)) / (2 * h);
  auto dm = [&](int i, int j, int k) { return k == 1 ? dm2(i, j) : 0.0; };
  const Eigen::Vector2d qd = x.tail<2>();
  Eigen::Vector2d coriolis = Eigen::Vector2d::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        coriolis(i) += 0.5 * (dm(i, j, k) + dm(i, k, j) - dm(j, k, i)) * qd(j) * qd(k);
      }
    }
  }
  const Eigen::Vector2d friction(0.1 * qd(0), 0.1 * qd(1));
  const Eigen::Vector2d lhs = arm.mass_matrix(x(1)) * dx.tail<2>() + coriolis + friction;
  EXPECT_LT((lhs - tau).norm(), 1e-7);
}

TEST(TwoLinkArmTest, KineticEnergyDissipatesUnderZeroTorque) {
  TwoLinkArmPlant arm;
  ArmState x(0.2, -0.5, 3.0, -2.0);
  double energy = arm.kinetic_energy(x);
  for (int k = 0; k < 200; ++k) {
    x = arm.step(x, Eigen::Vector2d::Zero());
    const double next = arm.kinetic_energy(x);
    EXPECT_LE(next, energy + 1e-8);
    energy = next;
  }
  EXPECT_LT(energy, 0.9 * arm.kinetic_energy(ArmState(0.2, -0.5, 3.0, -2.0)));
}

TEST(TwoLinkArmTest, FrictionlessEnergyIsConserved) {
  ArmParameters p;
  p.friction1 = p.friction2 = 0.0;
  TwoLinkArmPlant arm(p);
  ArmState x(0.0, 0.7, 1.5, -1.0);
  const double e0 = arm.kinetic_energy(x);
  for (int k = 0; k < 100; ++k) x = arm.step(x, Eigen::Vector2d::Zero());
  EXPECT_NEAR(arm.kinetic_energy(x), e0, 1e-8 * e0);
}

TEST(TwoLinkArmTest, RungeKuttaIsFourthOrder) {
  const ArmState x0(0.1, 0.9, 2.0, -3.0);
  const Eigen::Vector2d tau(1.0, -0.5);
  auto run = [&](int substeps) {
    ArmParameters p;
    p.substeps = substeps;
    return TwoLinkArmPlant(p).step(x0, tau);
  };
  const ArmState ref = run(1024);
  const double e1 = (run(4) - ref).norm();
  const double e2 = (run(8) - ref).norm();
  EXPECT_GT(e1 / e2, 12.0);
  EXPECT_LT(e1 / e2, 20.0);
}

TEST(TwoLinkArmTest, Deterministic) {
  TwoLinkArmPlant arm;
  Rng rng(90);
  const auto u = testing::random_trajectory(rng, 2, 60);
  EXPECT_EQ(arm.simulate(u), arm.simulate(u));
}

TEST(TwoLinkArmTest, DivergenceRaisesPlantFailure) {
  TwoLinkArmPlant arm;
  Eigen::VectorXd d = Eigen::VectorXd::Zero(8);
  d(2) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(arm.simulate(Trajectory(d, 2)), PlantFailure);
  d(2) = 1e300;
  EXPECT_THROW(arm.simulate(Trajectory(d, 2)), PlantFailure);
}

TEST(TwoLinkArmTest, RejectsBadConfiguration) {
  ArmParameters p;
  p.mass2 = 0.0;
  EXPECT_THROW(TwoLinkArmPlant{p}, std::invalid_argument);
  p = {};
  p.substeps = 0;
  EXPECT_THROW(TwoLinkArmPlant{p}, std::invalid_argument);
  EXPECT_THROW(TwoLinkArmPlant().simulate(Trajectory(3, 2)), std::invalid_argument);
}

TEST(TwoLinkArmTest, OutputsJointAnglesAfterEachSample) {
  TwoLinkArmPlant arm;
  Eigen::VectorXd d = Eigen::VectorXd::Zero(6);
  d.head(2) << 0.4, -0.1;
  const auto y = arm.simulate(Trajectory(d, 2));
  ArmState x = arm.step(ArmState::Zero(), Eigen::Vector2d(0.4, -0.1));
  EXPECT_EQ(y.sample(0), x.head<2>());
  x = arm.step(x, Eigen::Vector2d::Zero());
  EXPECT_EQ(y.sample(1), x.head<2>());
}

}  // namespace
}  // namespace dilc::plants
