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

#include "dilc/dual_learning.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "dilc/design_laws.h"
#include "dilc/diagnostics.h"
#include "dilc/plants.h"
#include "test_util.h"

namespace dilc::learning {
namespace {

using testing::lifted_input_oracle;
using testing::norm2;
using testing::random_toeplitz;
using testing::random_trajectory;
using testing::relative_error;
using testing::toeplitz_oracle;
using testing::weighted_ridge_oracle;

ToeplitzOperator example_plant() {
  Eigen::MatrixXd p1(2, 2), p2(2, 2);
  p1 << 1, 0, 0, 1;
  p2 << 0.5, 0.1, 0, 0.5;
  return ToeplitzOperator({p1, p2});
}

const Trajectory kExampleInput(Eigen::Vector4d(1, 0, 0, 1), 2);

Trajectory scalar(double v) { return Trajectory(Eigen::VectorXd::Constant(1, v), 1); }

TEST(PredictionErrorTest, PerfectModelGivesZero) {
  const auto y = apply_operator(example_plant(), kExampleInput);
  EXPECT_TRUE(prediction_error(lift_model(example_plant()), y, kExampleInput)
                  .data()
                  .isZero(1e-15));
}

TEST(PredictionErrorTest, ZeroModelGivesOutput) {
  const auto y = apply_operator(example_plant(), kExampleInput);
  EXPECT_EQ(prediction_error(ModelVector(2, 2), y, kExampleInput), y);
}

TEST(PredictionErrorTest, HalfModel) {
  const auto y = apply_operator(example_plant(), kExampleInput);
  const ModelVector half(0.5 * lift_model(example_plant()).data(), 2, 2);
  EXPECT_TRUE(prediction_error(half, y, kExampleInput)
                  .data()
                  .isApprox(Eigen::Vector4d(0.5, 0, 0.25, 0.5), 1e-15));
}

TEST(PredictionErrorTest, DimensionMismatchThrows) {
  EXPECT_THROW(prediction_error(ModelVector(2, 3), kExampleInput, kExampleInput),
               std::invalid_argument);
}

TEST(TrackingErrorTest, Cases) {
  const Trajectory r(Eigen::Vector4d(1, 0, 0.5, 1), 2);
  const auto y = apply_operator(example_plant(), kExampleInput);
  EXPECT_TRUE(tracking_error(r, y).data().isZero(0.0));
  EXPECT_EQ(tracking_error(r, Trajectory(2, 2)), r);
  EXPECT_THROW(tracking_error(r, Trajectory(1, 4)), std::invalid_argument);
}

TEST(ImlStepTest, FixedPointWhenPredictionExact) {
  Rng rng(50);
  const auto m = ModelVector(gaussian_vector(rng, 12), 2, 3);
  const auto u = random_trajectory(rng, 2, 3);
  const auto y = apply_operator(lift_input(u), m);
  for (Design d : {Design::kGradient, Design::kNormOptimal}) {
    const auto next = iml_step({m, 4}, u, y, d);
    EXPECT_LT((next.model.data() - m.data()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(next.trial, 5u);
  }
}

TEST(ImlStepTest, ZeroInputLeavesModel) {
  Rng rng(51);
  const auto m = ModelVector(gaussian_vector(rng, 12), 2, 3);
  const auto y = random_trajectory(rng, 2, 3);
  for (Design d : {Design::kGradient, Design::kNormOptimal}) {
    EXPECT_EQ(iml_step({m, 0}, Trajectory(2, 3), y, d).model, m);
  }
}

TEST(ImlStepTest, ScalarHalfStep) {
  const auto next = iml_step({ModelVector(1, 1), 0}, scalar(1.0), scalar(2.0),
                             Design::kNormOptimal);
  EXPECT_DOUBLE_EQ(next.model.data()(0), 1.0);
}

TEST(ImlStepTest, MatchesOracles) {
  Rng rng(52);
  for (int rep = 0; rep < 20; ++rep) {
    const Index o = 1 + rep % 3, n = 1 + rep % 5;
    const auto u = random_trajectory(rng, o, n);
    const auto y = random_trajectory(rng, o, n);
    const ModelVector m(gaussian_vector(rng, o * o * n), o, n);
    const Eigen::MatrixXd ud = lifted_input_oracle(u);
    const auto lifted = lift_input(u);

    const auto wn = design::self_parametrize_noiml(lifted);
    const Eigen::VectorXd want_no =
        weighted_ridge_oracle(ud, wn.error_weight, wn.step_penalty, y.data(), m.data());
    EXPECT_LT(relative_error(iml_step({m, 0}, u, y, Design::kNormOptimal).model.data(),
                             want_no),
              1e-9);

    const auto wg = design::self_parametrize_giml(lifted);
    const Eigen::VectorXd want_g =
        m.data() + ud.transpose() * (wg.error_weight.asDiagonal() * (y.data() - ud * m.data()));
    EXPECT_LT(relative_error(iml_step({m, 0}, u, y, Design::kGradient).model.data(), want_g),
              1e-12);
  }
}

TEST(IlcStepTest, ZeroErrorLeavesInput) {
  Rng rng(53);
  const auto u = random_trajectory(rng, 2, 3);
  const auto m = random_toeplitz(rng, 2, 2, 3);
  for (Design d : {Design::kGradient, Design::kNormOptimal}) {
    EXPECT_EQ(ilc_step({u, Trajectory(2, 3), 0}, Trajectory(2, 3), m, d).input, u);
  }
}

TEST(IlcStepTest, GradientWithIdentityModelAddsError) {
  Rng rng(54);
  const auto u = random_trajectory(rng, 2, 3);
  const auto e = random_trajectory(rng, 2, 3);
  const auto next = ilc_step({u, Trajectory(2, 3), 2}, e,
                             ToeplitzOperator::identity(2, 3), Design::kGradient);
  EXPECT_TRUE(next.input.data().isApprox((u + e).data(), 1e-15));
  EXPECT_EQ(next.trial, 3u);
}

TEST(IlcStepTest, ScalarNormOptimalQuarterStep) {
  const ToeplitzOperator m({Eigen::MatrixXd::Constant(1, 1, 2.0)});
  const auto next = ilc_step({scalar(0.3), scalar(0.0), 0}, scalar(1.0), m,
                             Design::kNormOptimal);
  EXPECT_NEAR(next.input.data()(0), 0.3 + 0.25, 1e-15);
}

TEST(IlcStepTest, ShapeMismatchThrows) {
  EXPECT_THROW(ilc_step({Trajectory(2, 3), Trajectory(2, 3), 0}, Trajectory(2, 3),
                        ToeplitzOperator::identity(2, 4), Design::kGradient),
               std::invalid_argument);
}

// Executor over an exact lifted operator, optionally failing at one trial.
class LiftedExecutor : public TrialExecutor {
 public:
  explicit LiftedExecutor(ToeplitzOperator op, std::size_t fail_at = SIZE_MAX)
      : op_(std::move(op)), fail_at_(fail_at) {}
  Index channels() const override { return op_.block_rows(); }
  Trajectory execute(const Trajectory& u, std::size_t trial) override {
    if (trial == fail_at_) throw std::runtime_error("actuator fault");
    return apply_operator(op_, u);
  }
  std::optional<ModelVector> true_parameters(Index) const override {
    return lift_model(op_);
  }

 private:
  ToeplitzOperator op_;
  std::size_t fail_at_;
};

TEST(DilcRunTest, SingleTrial) {
  Rng rng(55);
  LiftedExecutor plant(random_toeplitz(rng, 2, 2, 5));
  const auto result = dilc_run(plant, plants::reference_library("sine", 2, 5), 1, {});
  ASSERT_EQ(result.records.size(), 1u);
  EXPECT_EQ(result.records[0].normalized_error_norm, 1.0);
  EXPECT_FALSE(result.failure);
}

TEST(DilcRunTest, RejectsZeroTrials) {
  LiftedExecutor plant(ToeplitzOperator::identity(2, 3));
  EXPECT_THROW(dilc_run(plant, Trajectory(2, 3), 0, {}), std::invalid_argument);
}

TEST(DilcRunTest, InitialInputAndModel) {
  Rng rng(56);
  LiftedExecutor plant(random_toeplitz(rng, 3, 3, 40));
  DilcOptions opts;
  opts.seed = 9;
  opts.initial_input_stddev = 0.2;
  const auto result = dilc_run(plant, Trajectory(3, 40), 1, opts);
  const auto& u0 = result.records[0].input.data();
  EXPECT_NEAR(u0.mean(), 0.0, 0.06);
  EXPECT_NEAR(std::sqrt(u0.squaredNorm() / u0.size()), 0.2, 0.05);
  EXPECT_TRUE(result.records[0].model.data().isZero(0.0));
}

TEST(DilcRunTest, FollowsTrialOrdering) {
  Rng rng(57);
  const auto p = random_toeplitz(rng, 2, 2, 4);
  LiftedExecutor plant(p);
  const auto r = plants::reference_library("multisine", 2, 4);
  DilcOptions opts;
  opts.seed = 3;
  const auto result = dilc_run(plant, r, 6, opts);
  ASSERT_EQ(result.records.size(), 6u);
  for (std::size_t j = 0; j + 1 < result.records.size(); ++j) {
    const auto& rec = result.records[j];
    const auto& next = result.records[j + 1];
    // m_{j+1} from the regularized least-squares oracle on (u_j, y_j).
    const auto lifted = lift_input(rec.input);
    const auto w = design::self_parametrize_noiml(lifted);
    const Eigen::VectorXd m_next =
        weighted_ridge_oracle(lifted_input_oracle(rec.input), w.error_weight,
                              w.step_penalty, rec.output.data(), rec.model.data());
    EXPECT_LT(relative_error(next.model.data(), m_next), 1e-9);
    // u_{j+1} uses the gain from M_{j+1}, not M_j.
    const auto model_next = unlift_model(next.model);
    const auto wq = design::self_parametrize_noilc(model_next);
    const Eigen::VectorXd step = weighted_ridge_oracle(
        toeplitz_oracle(model_next), wq.error_weight, wq.step_penalty,
        rec.error.data(), Eigen::VectorXd::Zero(8));
    EXPECT_LT(relative_error(next.input.data() - rec.input.data(), step), 1e-8);
    EXPECT_EQ(rec.error, r - rec.output);
  }
}

TEST(DilcRunTest, ExactModelGradientIlcContracts) {
  Rng rng(58);
  for (Index o = 1; o <= 2; ++o) {
    const auto m = random_toeplitz(rng, o, o, 6);
    LiftedExecutor plant(m);
    DilcOptions opts;
    opts.ilc_design = Design::kGradient;
    opts.initial_model = lift_model(m);
    const auto r = plants::reference_library("sine", o, 6);
    const auto result = dilc_run(plant, r, 10, opts);
    const Eigen::MatrixXd d = toeplitz_oracle(m);
    const auto w = design::self_parametrize_gilc(m).error_weight;
    const Eigen::MatrixXd map =
        Eigen::MatrixXd::Identity(6 * o, 6 * o) - d * d.transpose() * w.asDiagonal();
    const double factor = norm2(map);
    const double input_factor =
        norm2(Eigen::MatrixXd::Identity(6 * o, 6 * o) - d.transpose() * w.asDiagonal() * d);
    if (o == 1) {
      EXPECT_NEAR(factor, input_factor, 1e-12);
    }
    for (std::size_t j = 0; j + 1 < result.records.size(); ++j) {
      const auto& e = result.records[j].error.data();
      const auto& e_next = result.records[j + 1].error.data();
      EXPECT_LT(relative_error(e_next, map * e), 1e-9);
      EXPECT_LE(e_next.norm(), factor * e.norm() + 1e-12);
      EXPECT_LE(e_next.norm(), input_factor * e.norm() + 1e-12);
    }
  }
}

TEST(DilcRunTest, DeterministicForSeed) {
  Rng rng(59);
  const auto p = random_toeplitz(rng, 2, 2, 5);
  DilcOptions opts;
  opts.seed = 1234;
  LiftedExecutor a(p), b(p);
  const auto r = plants::reference_library("sine", 2, 5);
  const auto ra = dilc_run(a, r, 5, opts);
  const auto rb = dilc_run(b, r, 5, opts);
  for (std::size_t j = 0; j < 5; ++j) {
    EXPECT_EQ(ra.records[j].input, rb.records[j].input);
    EXPECT_EQ(ra.records[j].model, rb.records[j].model);
  }
  opts.seed = 1235;
  LiftedExecutor c(p);
  EXPECT_FALSE(dilc_run(c, r, 1, opts).records[0].input == ra.records[0].input);
}

TEST(DilcRunTest, PlantFailureKeepsPartialRecords) {
  Rng rng(60);
  LiftedExecutor plant(random_toeplitz(rng, 2, 2, 4), 3);
  const auto result = dilc_run(plant, plants::reference_library("sine", 2, 4), 10, {});
  EXPECT_EQ(result.records.size(), 3u);
  ASSERT_TRUE(result.failure);
  EXPECT_NE(result.failure->find("actuator fault"), std::string::npos);
}

TEST(DilcRunTest, ModelErrorFollowsContractionRecursion) {
  Rng rng(61);
  const auto p = random_toeplitz(rng, 2, 2, 5);
  LiftedExecutor plant(p);
  const auto truth = lift_model(p);
  const auto result = dilc_run(plant, plants::reference_library("sine", 2, 5), 12, {});
  for (std::size_t j = 0; j + 1 < result.records.size(); ++j) {
    const auto& rec = result.records[j];
    const auto lifted = lift_input(rec.input);
    const auto gain = design::design_iml_gain(Design::kNormOptimal, lifted);
    const Eigen::VectorXd em = truth.data() - rec.model.data();
    const Eigen::VectorXd want = em - gain.matrix * (lifted.dense() * em);
    const Eigen::VectorXd got = truth.data() - result.records[j + 1].model.data();
    EXPECT_LT((got - want).norm(), 1e-12 * std::max(1.0, em.norm()));
  }
}

// Model error under NO-IML with fresh random inputs every trial.
TEST(ModelConvergenceTest, NonincreasingModelErrorWithRandomInputs) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto plant = plants::random_stable_plant(2, 4, seed);
    const auto p = plants::toeplitz_from_state_space(plant, 10);
    const auto truth = lift_model(p);
    Rng rng(derive_seed(seed, "inputs"));
    ImlState state{ModelVector(2, 10), 0};
    double prev = model_error_norm(state.model, truth);
    for (int j = 0; j < 20; ++j) {
      const auto u = random_trajectory(rng, 2, 10);
      state = iml_step(state, u, apply_operator(p, u), Design::kNormOptimal);
      const double now = model_error_norm(state.model, truth);
      EXPECT_LE(now, prev + kMonotoneSlack) << "seed " << seed << " trial " << j;
      prev = now;
    }
  }
}

// Repeated NO-IML updates on one (u, y) pair contract the prediction error by
// at most gamma per update.
TEST(PredictionConvergenceTest, RatioBoundedByGamma) {
  Rng rng(62);
  for (Index o = 1; o <= 3; ++o) {
    const auto u = random_trajectory(rng, o, 6);
    const auto y = random_trajectory(rng, o, 6);
    const auto lifted = lift_input(u);
    const auto gamma =
        check_prediction_contraction(design::design_iml_gain(Design::kNormOptimal, lifted),
                                     lifted);
    ASSERT_TRUE(gamma.contracting);
    ImlState state{ModelVector(o, 6), 0};
    for (int k = 0; k < 15; ++k) {
      const double before = prediction_error(state.model, y, u).norm();
      state = iml_step(state, u, y, Design::kNormOptimal);
      const double after = prediction_error(state.model, y, u).norm();
      EXPECT_LE(after, gamma.gamma * before + 1e-10);
    }
  }
}

TEST(ModelContractionTest, MimoNormNeverBelowOne) {
  Rng rng(63);
  for (int rep = 0; rep < 40; ++rep) {
    const Index o = 2 + rep % 2, n = 1 + rep % 8;
    const auto lifted = lift_input(random_trajectory(rng, o, n));
    for (Design d : {Design::kGradient, Design::kNormOptimal}) {
      const Eigen::MatrixXd l = design::design_iml_gain(d, lifted).matrix;
      const Eigen::MatrixXd r =
          Eigen::MatrixXd::Identity(o * o * n, o * o * n) - l * lifted.dense();
      EXPECT_GE(norm2(r), 1.0 - 1e-9);
    }
  }
}

}  // namespace
}  // namespace dilc::learning
