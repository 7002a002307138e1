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

#ifndef DILC_TRIAL_LOG_H_
#define DILC_TRIAL_LOG_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dilc/dual_learning.h"

namespace dilc::harness {

inline constexpr const char* kTrialLogHeader =
    "trial,e_norm,e_norm_normalized,pred_err_norm,model_err_norm,"
    "iml_contraction_norm,prediction_gamma,pe_rank";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One CSV row. Optional columns are written empty when unset.
struct LogRow {
  std::size_t trial = 0;
  double e_norm = 0.0;
  double e_norm_normalized = 0.0;
  double pred_err_norm = 0.0;
  std::optional<double> model_err_norm;
  std::optional<double> iml_contraction_norm;
  std::optional<double> prediction_gamma;
  Index pe_rank = 0;
};

LogRow to_log_row(const learning::TrialRecord& record);

/// 17 significant digits; reloads to the identical double.
std::string format_real(double value);

void write_trial_log(std::ostream& out, std::span<const LogRow> rows);
void write_trial_log(const std::filesystem::path& path,
                     std::span<const LogRow> rows);

/// Throws IoError if the file cannot be read, std::invalid_argument on a
/// malformed header or row.
std::vector<LogRow> read_trial_log(const std::filesystem::path& path);
std::vector<LogRow> read_trial_log(std::istream& in);

/// Condition flags recomputed from a log alone.
struct LogCheck {
  std::size_t trials = 0;
  std::size_t contraction_violations = 0;
  std::size_t contraction_unchecked = 0;
  std::size_t contracting_prediction_trials = 0;
  std::size_t rank_deficient_windows = 0;
  std::optional<std::size_t> threshold_trial;
  std::optional<std::size_t> model_error_increases;
  bool normalization_consistent = true;
  double final_normalized_error = 0.0;
};

/// `channels` is O, needed to judge full-window ranks; rows before the first
/// full window are not counted as deficient.
LogCheck check_log(std::span<const LogRow> rows, Index channels);

std::string describe(const LogCheck& check);

}  // namespace dilc::harness

#endif  // DILC_TRIAL_LOG_H_
