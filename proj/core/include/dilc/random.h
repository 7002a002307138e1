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

#ifndef DILC_RANDOM_H_
#define DILC_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Core>

namespace dilc {

using Rng = std::mt19937_64;

// Independent streams are split off one root seed by label so that enabling
// one consumer (e.g. measurement noise) never shifts another (e.g. the initial
// input draw).
std::uint64_t derive_seed(std::uint64_t root, std::string_view label);
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

Eigen::VectorXd gaussian_vector(Rng& rng, Eigen::Index size,
                                double stddev = 1.0);
Eigen::MatrixXd gaussian_matrix(Rng& rng, Eigen::Index rows,
                                Eigen::Index cols, double stddev = 1.0);

}  // namespace dilc

#endif  // DILC_RANDOM_H_
