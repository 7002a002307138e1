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

#ifndef DILC_PLANTS_H_
#define DILC_PLANTS_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>

#include <Eigen/Core>

#include "dilc/dual_learning.h"
#include "dilc/toeplitz.h"
#include "dilc/trajectory.h"

namespace dilc::plants {

/// Non-finite state or output during simulation.
class PlantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Repetitive system started from the same initial condition every trial.
/// simulate() returns the relative-degree-one shifted output: output sample n
/// is the measurement taken after input sample n has acted for one period.
class Plant {
 public:
  virtual ~Plant() = default;
  virtual Index channels() const = 0;
  virtual Trajectory simulate(const Trajectory& u) const = 0;
  /// Exact lifted operator over `samples`, when the plant is LTI.
  virtual std::optional<ToeplitzOperator> lifted_operator(
      Index samples) const {
    (void)samples;
    return std::nullopt;
  }
};

/// x(k+1) = A x(k) + B u(k), y(k) = C x(k), x(1) = 0.
class StateSpacePlant final : public Plant {
 public:
  /// Throws std::invalid_argument on inconsistent shapes, a non-square I/O
  /// map or spectral radius of A >= 1.
  StateSpacePlant(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd c);

  const Eigen::MatrixXd& a() const { return a_; }
  const Eigen::MatrixXd& b() const { return b_; }
  const Eigen::MatrixXd& c() const { return c_; }
  Index state_dim() const { return a_.rows(); }

  Index channels() const override { return b_.cols(); }
  Trajectory simulate(const Trajectory& u) const override;
  std::optional<ToeplitzOperator> lifted_operator(
      Index samples) const override;

 private:
  Eigen::MatrixXd a_;
  Eigen::MatrixXd b_;
  Eigen::MatrixXd c_;
};

double spectral_radius(const Eigen::MatrixXd& a);

/// Markov-parameter Toeplitz operator, block n = C A^n B (zero-based n).
ToeplitzOperator toeplitz_from_state_space(const StateSpacePlant& plant,
                                           Index samples);

/// Random stable plant with spectral radius of A rescaled to
/// `spectral_radius_target`. Draws are repeated until B, C have full rank and
/// C B is nonzero. Deterministic in `seed`.
StateSpacePlant random_stable_plant(Index channels, Index state_dim,
                                    std::uint64_t seed,
                                    double spectral_radius_target = 0.9);

/// y = P u for a given lifted operator; the exact-model oracle plant.
class LiftedPlant final : public Plant {
 public:
  explicit LiftedPlant(ToeplitzOperator op);
  Index channels() const override { return op_.block_cols(); }
  Trajectory simulate(const Trajectory& u) const override;
  std::optional<ToeplitzOperator> lifted_operator(
      Index samples) const override;

 private:
  ToeplitzOperator op_;
};

/// Additive zero-mean Gaussian measurement noise, i.i.d. per sample.
struct NoiseModel {
  /// One standard deviation per output channel; empty or all-zero disables.
  Eigen::VectorXd stddev;
  std::uint64_t seed = 0;

  static NoiseModel none() { return {}; }
  static NoiseModel uniform(Index channels, double sigma, std::uint64_t seed);
};

/// Runs one trial and adds measurement noise. The noise stream depends only
/// on (noise.seed, trial), so repeating a trial reproduces it bit for bit.
Trajectory execute_trial(const Plant& plant, const Trajectory& u,
                         const NoiseModel& noise, std::size_t trial);

/// Adapts a plant and noise model to the learning loop.
class PlantExecutor final : public learning::TrialExecutor {
 public:
  PlantExecutor(std::shared_ptr<const Plant> plant, NoiseModel noise);

  Index channels() const override { return plant_->channels(); }
  Trajectory execute(const Trajectory& u, std::size_t trial) override;
  std::optional<ModelVector> true_parameters(Index samples) const override;

 private:
  std::shared_ptr<const Plant> plant_;
  NoiseModel noise_;
};

/// Named reference presets. Every preset starts at zero at the first sample.
///   "zero"      all zeros
///   "sine"      channel k: A (sin(2 pi t + phi_k) - sin(phi_k)), t = n / N,
///               phi_k = k pi / 2, so channel 0 is a sine and channel 1 the
///               cosine-phase variant
///   "multisine" sum of first and second harmonics with per-channel phases
///   "step"      piecewise constant with jumps at N/4 and 3N/4 (N >= 4)
/// Throws std::invalid_argument for unknown names.
Trajectory reference_library(std::string_view name, Index channels,
                             Index samples, double amplitude = 1.0);

}  // namespace dilc::plants

#endif  // DILC_PLANTS_H_
