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

#ifndef DILC_TRAJECTORY_H_
#define DILC_TRAJECTORY_H_

#include <Eigen/Core>

namespace dilc {

using Index = Eigen::Index;

// Index convention used throughout the library.
//
// A lifted vector stacks N samples of a fixed-width per-sample vector in time
// order. Sample indices are zero-based: sample n (0 <= n < N) of a trajectory
// with O channels lives at offset n * O, and entry k of that sample at
// n * O + k. Toeplitz blocks follow the same convention: block(0) is the
// first Markov parameter, i.e. the block on the main block diagonal.
//
// Outputs are relative-degree-one shifted: output sample n pairs with the
// plant's response after input sample n has been applied.

/// Stacked multi-channel signal over one trial: inputs, outputs, references
/// and errors all share this layout.
class Trajectory {
 public:
  Trajectory() = default;

  /// Zero trajectory.
  Trajectory(Index channels, Index samples);

  /// Wraps `data`; throws std::invalid_argument unless its length is a
  /// positive multiple of `channels`.
  Trajectory(Eigen::VectorXd data, Index channels);

  Index channels() const { return channels_; }
  Index samples() const { return samples_; }
  Index size() const { return data_.size(); }

  const Eigen::VectorXd& data() const { return data_; }

  /// Per-sample vector, zero-based.
  Eigen::VectorXd::ConstSegmentReturnType sample(Index n) const {
    return data_.segment(n * channels_, channels_);
  }

  double norm() const { return data_.norm(); }

  bool same_shape(const Trajectory& other) const {
    return channels_ == other.channels_ && samples_ == other.samples_;
  }

  friend bool operator==(const Trajectory& a, const Trajectory& b) {
    return a.same_shape(b) && a.data_ == b.data_;
  }

 private:
  Eigen::VectorXd data_;
  Index channels_ = 0;
  Index samples_ = 0;
};

Trajectory operator+(const Trajectory& a, const Trajectory& b);
Trajectory operator-(const Trajectory& a, const Trajectory& b);
Trajectory operator*(double scale, const Trajectory& a);

/// Lifted model parameter vector: N consecutive blocks of O*O entries, block n
/// being the row-major vectorization of the n-th O x O Toeplitz block.
class ModelVector {
 public:
  ModelVector() = default;

  /// Zero model.
  ModelVector(Index channels, Index samples);

  /// Throws std::invalid_argument unless length == channels^2 * samples.
  ModelVector(Eigen::VectorXd data, Index channels, Index samples);

  Index channels() const { return channels_; }
  Index samples() const { return samples_; }
  Index size() const { return data_.size(); }

  const Eigen::VectorXd& data() const { return data_; }

  Eigen::VectorXd::ConstSegmentReturnType block(Index n) const {
    return data_.segment(n * channels_ * channels_, channels_ * channels_);
  }

  double norm() const { return data_.norm(); }

  bool same_shape(const ModelVector& other) const {
    return channels_ == other.channels_ && samples_ == other.samples_;
  }

  friend bool operator==(const ModelVector& a, const ModelVector& b) {
    return a.same_shape(b) && a.data_ == b.data_;
  }

 private:
  Eigen::VectorXd data_;
  Index channels_ = 0;
  Index samples_ = 0;
};

}  // namespace dilc

#endif  // DILC_TRAJECTORY_H_
