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

#include "dilc/trial_log.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dilc/diagnostics.h"

namespace dilc::harness {

LogRow to_log_row(const learning::TrialRecord& record) {
  LogRow row;
  row.trial = record.trial;
  row.e_norm = record.tracking_error_norm;
  row.e_norm_normalized = record.normalized_error_norm;
  row.pred_err_norm = record.prediction_error_norm;
  row.model_err_norm = record.model_error_norm;
  row.iml_contraction_norm = record.iml_contraction_norm;
  row.prediction_gamma = record.prediction_gamma;
  row.pe_rank = record.pe_window_rank;
  return row;
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  std::string out(buf);
  if (std::isfinite(value) &&
      out.find_first_of(".eE") == std::string::npos) {
    out += ".0";
  }
  return out;
}

namespace {

std::string optional_real(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_real(const std::string& text, std::size_t line) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("trial log line " + std::to_string(line) +
                                ": bad number '" + text + "'");
  }
  return value;
}

template <typename Int>
Int parse_int(const std::string& text, std::size_t line) {
  Int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("trial log line " + std::to_string(line) +
                                ": bad integer '" + text + "'");
  }
  return value;
}

std::optional<double> parse_optional(const std::string& text,
                                     std::size_t line) {
  if (text.empty()) return std::nullopt;
  return parse_real(text, line);
}

}  // namespace

void write_trial_log(std::ostream& out, std::span<const LogRow> rows) {
  out << kTrialLogHeader << '\n';
  for (const auto& r : rows) {
    out << r.trial << ',' << format_real(r.e_norm) << ','
        << format_real(r.e_norm_normalized) << ','
        << format_real(r.pred_err_norm) << ',' << optional_real(r.model_err_norm)
        << ',' << optional_real(r.iml_contraction_norm) << ','
        << optional_real(r.prediction_gamma) << ',' << r.pe_rank << '\n';
  }
}

void write_trial_log(const std::filesystem::path& path,
                     std::span<const LogRow> rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_trial_log(out, rows);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<LogRow> read_trial_log(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("trial log: missing header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTrialLogHeader) {
    throw std::invalid_argument("trial log: unexpected header '" + line + "'");
  }
  std::vector<LogRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 8) {
      throw std::invalid_argument("trial log line " + std::to_string(line_no) +
                                  ": expected 8 fields");
    }
    LogRow r;
    r.trial = parse_int<std::size_t>(f[0], line_no);
    r.e_norm = parse_real(f[1], line_no);
    r.e_norm_normalized = parse_real(f[2], line_no);
    r.pred_err_norm = parse_real(f[3], line_no);
    r.model_err_norm = parse_optional(f[4], line_no);
    r.iml_contraction_norm = parse_optional(f[5], line_no);
    r.prediction_gamma = parse_optional(f[6], line_no);
    r.pe_rank = parse_int<Index>(f[7], line_no);
    rows.push_back(r);
  }
  return rows;
}

std::vector<LogRow> read_trial_log(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return read_trial_log(in);
}

LogCheck check_log(std::span<const LogRow> rows, Index channels) {
  if (channels < 1) throw std::invalid_argument("check_log: channels must be positive");
  LogCheck check;
  check.trials = rows.size();
  if (rows.empty()) return check;

  std::vector<double> norms;
  norms.reserve(rows.size());
  const double initial = rows.front().e_norm;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto& r = rows[j];
    norms.push_back(r.e_norm);
    if (!r.iml_contraction_norm) {
      ++check.contraction_unchecked;
    } else if (*r.iml_contraction_norm > 1.0 + learning::kContractionSlack) {
      ++check.contraction_violations;
    }
    if (r.prediction_gamma && *r.prediction_gamma < 1.0) {
      ++check.contracting_prediction_trials;
    }
    if (j + 1 >= static_cast<std::size_t>(channels) && r.pe_rank < channels) {
      ++check.rank_deficient_windows;
    }
    const double expected =
        j == 0 ? 1.0 : (initial > 0.0 ? r.e_norm / initial : r.e_norm_normalized);
    if (std::abs(r.e_norm_normalized - expected) >
        1e-12 * std::max(1.0, std::abs(expected))) {
      check.normalization_consistent = false;
    }
  }
  check.threshold_trial = learning::threshold_trial(norms);
  if (rows.front().model_err_norm) {
    std::size_t increases = 0;
    for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
      if (rows[j + 1].model_err_norm.value_or(0.0) >
          rows[j].model_err_norm.value_or(0.0) + learning::kMonotoneSlack) {
        ++increases;
      }
    }
    check.model_error_increases = increases;
  }
  check.final_normalized_error = rows.back().e_norm_normalized;
  return check;
}

std::string describe(const LogCheck& c) {
  std::ostringstream out;
  out << "trials: " << c.trials << '\n'
      << "final normalized error: " << format_real(c.final_normalized_error)
      << '\n'
      << "threshold trial: "
      << (c.threshold_trial ? std::to_string(*c.threshold_trial) : "none")
      << '\n'
      << "model contraction violations: " << c.contraction_violations
      << " (unchecked trials: " << c.contraction_unchecked << ")\n"
      << "trials with contracting prediction map: "
      << c.contracting_prediction_trials << '\n'
      << "rank-deficient excitation windows: " << c.rank_deficient_windows
      << '\n'
      << "model error increases: "
      << (c.model_error_increases ? std::to_string(*c.model_error_increases)
                                  : "n/a")
      << '\n'
      << "normalization consistent: "
      << (c.normalization_consistent ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace dilc::harness
