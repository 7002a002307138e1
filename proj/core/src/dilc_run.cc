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

#include <algorithm>
#include <deque>
#include <exception>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dilc/design_laws.h"
#include "dilc/diagnostics.h"
#include "dilc/dual_learning.h"
#include "dilc/random.h"

namespace dilc::learning {

DilcResult dilc_run(TrialExecutor& plant, const Trajectory& reference,
                    std::size_t trials, const DilcOptions& options) {
  if (trials == 0) throw std::invalid_argument("dilc_run: trials must be >= 1");
  const Index o = reference.channels();
  const Index n = reference.samples();
  if (plant.channels() != o) {
    throw std::invalid_argument("dilc_run: plant and reference channels differ");
  }

  Rng u0_rng(derive_seed(options.seed, "u0"));
  Rng dither_rng(derive_seed(options.seed, "dither"));

  Trajectory u = options.initial_input
                     ? *options.initial_input
                     : Trajectory(gaussian_vector(u0_rng, o * n,
                                                  options.initial_input_stddev),
                                  o);
  ModelVector m = options.initial_model ? *options.initial_model
                                        : ModelVector(o, n);
  if (!u.same_shape(reference) || m.channels() != o || m.samples() != n) {
    throw std::invalid_argument("dilc_run: initial input or model has the wrong shape");
  }
  const std::optional<ModelVector> truth = plant.true_parameters(n);

  DilcResult result;
  result.records.reserve(trials);
  std::deque<Eigen::VectorXd> window;
  double initial_error = 0.0;

  for (std::size_t j = 0; j < trials; ++j) {
    Trajectory y;
    try {
      y = plant.execute(u, j);
    } catch (const std::exception& ex) {
      result.failure = ex.what();
      break;
    }
    if (!y.same_shape(reference)) {
      result.failure = "plant returned an output of the wrong shape";
      break;
    }

    TrialRecord rec;
    rec.trial = j;
    rec.error = tracking_error(reference, y);
    rec.tracking_error_norm = rec.error.norm();
    if (j == 0) {
      initial_error = rec.tracking_error_norm;
      rec.normalized_error_norm = 1.0;
    } else if (initial_error > 0.0) {
      rec.normalized_error_norm = rec.tracking_error_norm / initial_error;
    } else {
      rec.normalized_error_norm = rec.tracking_error_norm == 0.0
                                      ? 0.0
                                      : std::numeric_limits<double>::infinity();
    }

    // Model learning.
    const LiftedInputMatrix lifted = lift_input(u);
    const Trajectory e_hat = y - apply_operator(lifted, m);
    rec.prediction_error_norm = e_hat.norm();
    if (truth) rec.model_error_norm = model_error_norm(m, *truth);
    const auto iml_gain =
        design::design_iml_gain(options.iml_design, lifted, options.self_param);
    if (options.contraction_diagnostics) {
      const double norm = model_contraction_norm(iml_gain, lifted);
      rec.iml_contraction_norm = norm;
      rec.iml_contraction_ok = norm <= 1.0 + kContractionSlack;
      rec.prediction_gamma =
          check_prediction_contraction(iml_gain, lifted).gamma;
    }
    window.emplace_back(u.sample(0));
    if (static_cast<Index>(window.size()) > o) window.pop_front();
    const std::vector<Eigen::VectorXd> window_samples(window.begin(),
                                                      window.end());
    rec.pe_window_rank = first_sample_rank(window_samples);

    ModelVector m_next(m.data() + iml_gain.apply(e_hat.data()), o, n);

    // Control learning with the freshly updated model.
    const auto ilc_gain = design::design_ilc_gain(
        options.ilc_design, unlift_model(m_next), options.self_param);
    Eigen::VectorXd u_next = u.data() + ilc_gain.apply(rec.error.data());
    if (options.excitation_dither > 0.0 &&
        static_cast<Index>(window.size()) == o && rec.pe_window_rank < o) {
      u_next += gaussian_vector(dither_rng, o * n, options.excitation_dither);
    }

    rec.input = std::move(u);
    rec.output = std::move(y);
    rec.model = std::move(m);
    result.records.push_back(std::move(rec));

    u = Trajectory(std::move(u_next), o);
    m = std::move(m_next);
  }

  result.final_input = std::move(u);
  result.final_model = std::move(m);
  return result;
}

}  // namespace dilc::learning
