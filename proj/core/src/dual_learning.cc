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

#include <stdexcept>

namespace dilc::learning {

Trajectory prediction_error(const ModelVector& m, const Trajectory& y,
                            const Trajectory& u) {
  if (!y.same_shape(u) || m.channels() != u.channels() ||
      m.samples() != u.samples()) {
    throw std::invalid_argument("prediction_error: dimension mismatch");
  }
  return y - apply_operator(lift_input(u), m);
}

Trajectory tracking_error(const Trajectory& r, const Trajectory& y) {
  if (!r.same_shape(y)) {
    throw std::invalid_argument("tracking_error: shape mismatch");
  }
  return r - y;
}

ImlState iml_step(const ImlState& state, const Trajectory& u,
                  const Trajectory& y, Design design,
                  const SelfParamOptions& options) {
  const Trajectory e_hat = prediction_error(state.model, y, u);
  const auto gain = design::design_iml_gain(design, lift_input(u), options);
  return {ModelVector(state.model.data() + gain.apply(e_hat.data()),
                      state.model.channels(), state.model.samples()),
          state.trial + 1};
}

IlcState ilc_step(const IlcState& state, const Trajectory& e,
                  const ToeplitzOperator& model, Design design,
                  const SelfParamOptions& options) {
  if (!state.input.same_shape(e) || !state.reference.same_shape(e)) {
    throw std::invalid_argument("ilc_step: shape mismatch");
  }
  if (model.block_cols() != e.channels() || model.horizon() != e.samples()) {
    throw std::invalid_argument("ilc_step: model does not match trajectory");
  }
  const auto gain = design::design_ilc_gain(design, model, options);
  return {Trajectory(state.input.data() + gain.apply(e.data()),
                     e.channels()),
          state.reference, state.trial + 1};
}

}  // namespace dilc::learning
