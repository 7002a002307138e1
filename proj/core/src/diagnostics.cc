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

#include "dilc/diagnostics.h"

#include <algorithm>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace dilc::learning {

namespace {

Index rank_from_singular_values(const Eigen::VectorXd& sv,
                                double relative_tolerance) {
  if (sv.size() == 0) return 0;
  const double largest = sv.maxCoeff();
  if (largest <= 0.0) return 0;
  return (sv.array() > relative_tolerance * largest).count();
}

double largest_singular_value(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  return svd.singularValues()(0);
}

Eigen::MatrixXd sample_matrix(std::span<const Eigen::VectorXd> samples) {
  const Index rows = samples.empty() ? 0 : samples.front().size();
  Eigen::MatrixXd out(rows, static_cast<Index>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].size() != rows) {
      throw std::invalid_argument("excitation: sample lengths differ");
    }
    out.col(static_cast<Index>(i)) = samples[i];
  }
  return out;
}

}  // namespace

Index first_sample_rank(std::span<const Eigen::VectorXd> samples,
                        double relative_tolerance) {
  if (samples.empty()) return 0;
  const Eigen::MatrixXd a = sample_matrix(samples);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  return rank_from_singular_values(svd.singularValues(), relative_tolerance);
}

ExcitationVerdict check_excitation(std::span<const Eigen::VectorXd> samples,
                                   double relative_tolerance) {
  const Index o = static_cast<Index>(samples.size());
  for (const auto& s : samples) {
    if (s.size() != o) {
      throw std::invalid_argument(
          "check_excitation: expects O vectors of length O");
    }
  }
  const Index rank = first_sample_rank(samples, relative_tolerance);
  return {o > 0 && rank == o, rank};
}

double model_contraction_norm(const design::LearningGain& gain,
                              const LiftedInputMatrix& lifted) {
  const Eigen::MatrixXd u = lifted.dense();
  const Eigen::MatrixXd& l = gain.matrix;
  if (l.rows() != u.cols() || l.cols() != u.rows()) {
    throw std::invalid_argument("check_model_contraction: shape mismatch");
  }
  const Index n = u.cols();
  const Index k = 2 * u.rows();
  if (k >= n) {
    Eigen::MatrixXd e = -l * u;
    e.diagonal().array() += 1.0;
    return largest_singular_value(e);
  }
  // L^U maps into range(L^) and vanishes on range(U^T)'s complement. With Q an
  // orthonormal basis containing both ranges, I - L^U is the identity on
  // span(Q)'s complement and Q (I - Q^T L^ U Q) Q^T on span(Q), so its norm is
  // max(1, |I - Q^T L^ U Q|).
  Eigen::MatrixXd basis(n, k);
  basis << u.transpose(), l;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
  Eigen::MatrixXd reduced = -(q.transpose() * l) * (u * q);
  reduced.diagonal().array() += 1.0;
  return std::max(1.0, largest_singular_value(reduced));
}

ModelContraction check_model_contraction(const design::LearningGain& gain,
                                         const LiftedInputMatrix& lifted) {
  ModelContraction out;
  out.norm = model_contraction_norm(gain, lifted);
  out.within_bound = out.norm <= 1.0 + kContractionSlack;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(gain.matrix);
  out.gain_full_column_rank =
      rank_from_singular_values(svd.singularValues(), kRankTolerance) ==
      gain.matrix.cols();
  return out;
}

PredictionContraction check_prediction_contraction(
    const design::LearningGain& gain, const LiftedInputMatrix& lifted) {
  const Eigen::MatrixXd u = lifted.dense();
  if (gain.matrix.rows() != u.cols() || gain.matrix.cols() != u.rows()) {
    throw std::invalid_argument("check_prediction_contraction: shape mismatch");
  }
  Eigen::MatrixXd e = -u * gain.matrix;
  e.diagonal().array() += 1.0;
  const double gamma = largest_singular_value(e);
  return {gamma, gamma < 1.0};
}

double model_error_norm(const ModelVector& m, const ModelVector& truth) {
  if (m.size() != truth.size()) {
    throw std::invalid_argument("model_error_norm: length mismatch");
  }
  return (truth.data() - m.data()).norm();
}

std::optional<std::size_t> threshold_trial(std::span<const double> norms,
                                           double slack) {
  if (norms.size() <= 1) return norms.empty() ? std::nullopt
                                              : std::optional<std::size_t>(0);
  std::size_t threshold = 0;
  for (std::size_t j = 0; j + 1 < norms.size(); ++j) {
    if (norms[j + 1] > norms[j] + slack) threshold = j + 1;
  }
  if (threshold == norms.size() - 1) return std::nullopt;
  return threshold;
}

DiagnosticReport analyze_trials(std::span<const TrialRecord> records) {
  DiagnosticReport report;
  report.trials = records.size();
  if (records.empty()) return report;

  const Index o = records.front().input.channels();
  std::vector<Eigen::VectorXd> first;
  first.reserve(records.size());
  std::vector<double> norms;
  norms.reserve(records.size());
  for (const auto& r : records) {
    first.emplace_back(r.input.sample(0));
    norms.push_back(r.tracking_error_norm);
    if (r.iml_contraction_norm && !r.iml_contraction_ok) {
      ++report.contraction_violations;
    }
    if (r.prediction_gamma && *r.prediction_gamma < 1.0) {
      ++report.contracting_prediction_trials;
    }
  }
  for (std::size_t w = 0; w + static_cast<std::size_t>(o) <= first.size();
       ++w) {
    auto verdict = check_excitation(
        std::span<const Eigen::VectorXd>(first).subspan(w, o));
    if (!verdict.excited) ++report.excitation_failures;
    report.excitation_windows.push_back(verdict);
  }
  report.threshold_trial = threshold_trial(norms);
  if (records.front().model_error_norm) {
    std::size_t increases = 0;
    for (std::size_t j = 0; j + 1 < records.size(); ++j) {
      if (records[j + 1].model_error_norm.value_or(0.0) >
          records[j].model_error_norm.value_or(0.0) + kMonotoneSlack) {
        ++increases;
      }
    }
    report.model_error_increases = increases;
  }
  report.final_normalized_error = records.back().normalized_error_norm;
  return report;
}

}  // namespace dilc::learning
