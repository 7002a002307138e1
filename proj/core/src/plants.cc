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

#include "dilc/plants.h"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "dilc/lifting.h"
#include "dilc/random.h"

namespace dilc::plants {

double spectral_radius(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

StateSpacePlant::StateSpacePlant(Eigen::MatrixXd a, Eigen::MatrixXd b,
                                 Eigen::MatrixXd c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.rows() == 0 || a_.rows() != a_.cols()) {
    throw std::invalid_argument("StateSpacePlant: A must be square and non-empty");
  }
  if (b_.rows() != a_.rows() || c_.cols() != a_.rows()) {
    throw std::invalid_argument("StateSpacePlant: B or C does not match A");
  }
  if (b_.cols() == 0 || c_.rows() != b_.cols()) {
    throw std::invalid_argument(
        "StateSpacePlant: input and output counts must be equal");
  }
  if (!a_.allFinite() || !b_.allFinite() || !c_.allFinite()) {
    throw std::invalid_argument("StateSpacePlant: non-finite entries");
  }
  const double rho = spectral_radius(a_);
  if (!(rho < 1.0)) {
    throw std::invalid_argument("StateSpacePlant: unstable, spectral radius " +
                                std::to_string(rho));
  }
}

Trajectory StateSpacePlant::simulate(const Trajectory& u) const {
  if (u.channels() != channels()) {
    throw std::invalid_argument("StateSpacePlant: input channel mismatch");
  }
  Eigen::VectorXd x = Eigen::VectorXd::Zero(state_dim());
  Eigen::VectorXd y(u.size());
  const Index o = channels();
  for (Index n = 0; n < u.samples(); ++n) {
    x = a_ * x + b_ * u.sample(n);
    y.segment(n * o, o).noalias() = c_ * x;
  }
  if (!y.allFinite()) throw PlantFailure("StateSpacePlant: non-finite output");
  return Trajectory(std::move(y), o);
}

std::optional<ToeplitzOperator> StateSpacePlant::lifted_operator(
    Index samples) const {
  return toeplitz_from_state_space(*this, samples);
}

ToeplitzOperator toeplitz_from_state_space(const StateSpacePlant& plant,
                                           Index samples) {
  if (samples <= 0) {
    throw std::invalid_argument("toeplitz_from_state_space: samples must be positive");
  }
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(samples);
  Eigen::MatrixXd a_pow_b = plant.b();
  for (Index n = 0; n < samples; ++n) {
    blocks.emplace_back(plant.c() * a_pow_b);
    a_pow_b = plant.a() * a_pow_b;
  }
  return ToeplitzOperator(std::move(blocks));
}

namespace {

Index matrix_rank(const Eigen::MatrixXd& a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return (sv.array() > 1e-10 * sv(0)).count();
}

}  // namespace

StateSpacePlant random_stable_plant(Index channels, Index state_dim,
                                    std::uint64_t seed,
                                    double spectral_radius_target) {
  if (channels <= 0 || state_dim < channels) {
    throw std::invalid_argument("random_stable_plant: need 0 < O <= O_x");
  }
  if (!(spectral_radius_target >= 0.0 && spectral_radius_target < 1.0)) {
    throw std::invalid_argument(
        "random_stable_plant: spectral radius target must lie in [0, 1)");
  }
  Rng rng(derive_seed(seed, "random_stable_plant"));
  for (;;) {
    Eigen::MatrixXd a = gaussian_matrix(rng, state_dim, state_dim);
    Eigen::MatrixXd b = gaussian_matrix(rng, state_dim, channels);
    Eigen::MatrixXd c = gaussian_matrix(rng, channels, state_dim);
    if (spectral_radius_target == 0.0) {
      a.setZero();
    } else {
      const double rho = spectral_radius(a);
      if (rho < 1e-12) continue;
      a *= spectral_radius_target / rho;
      if (!(spectral_radius(a) < 1.0)) continue;
    }
    if (matrix_rank(b) < channels || matrix_rank(c) < channels) continue;
    const Eigen::MatrixXd cb = c * b;
    if (cb.norm() <= 1e-8 * c.norm() * b.norm()) continue;
    return StateSpacePlant(std::move(a), std::move(b), std::move(c));
  }
}

LiftedPlant::LiftedPlant(ToeplitzOperator op) : op_(std::move(op)) {
  if (!op_.square_blocks()) {
    throw std::invalid_argument("LiftedPlant: blocks must be square");
  }
}

Trajectory LiftedPlant::simulate(const Trajectory& u) const {
  return apply_operator(op_, u);
}

std::optional<ToeplitzOperator> LiftedPlant::lifted_operator(
    Index samples) const {
  if (samples != op_.horizon()) return std::nullopt;
  return op_;
}

NoiseModel NoiseModel::uniform(Index channels, double sigma,
                               std::uint64_t seed) {
  return {Eigen::VectorXd::Constant(channels, sigma), seed};
}

Trajectory execute_trial(const Plant& plant, const Trajectory& u,
                         const NoiseModel& noise, std::size_t trial) {
  Trajectory y = plant.simulate(u);
  if (noise.stddev.size() == 0 || (noise.stddev.array() == 0.0).all()) {
    return y;
  }
  const Index o = y.channels();
  if (noise.stddev.size() != o) {
    throw std::invalid_argument("execute_trial: noise stddev per channel mismatch");
  }
  Rng rng(derive_seed(noise.seed, static_cast<std::uint64_t>(trial)));
  std::normal_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd data = y.data();
  for (Index n = 0; n < y.samples(); ++n) {
    for (Index k = 0; k < o; ++k) data(n * o + k) += noise.stddev(k) * unit(rng);
  }
  return Trajectory(std::move(data), o);
}

PlantExecutor::PlantExecutor(std::shared_ptr<const Plant> plant,
                             NoiseModel noise)
    : plant_(std::move(plant)), noise_(std::move(noise)) {
  if (!plant_) throw std::invalid_argument("PlantExecutor: null plant");
}

Trajectory PlantExecutor::execute(const Trajectory& u, std::size_t trial) {
  return execute_trial(*plant_, u, noise_, trial);
}

std::optional<ModelVector> PlantExecutor::true_parameters(
    Index samples) const {
  auto op = plant_->lifted_operator(samples);
  if (!op) return std::nullopt;
  return lift_model(*op);
}

}  // namespace dilc::plants
