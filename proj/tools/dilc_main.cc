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

// dilc: run, sweep and check dual iterative learning experiments.
//
// Exit codes: 0 success, 1 config error, 2 plant/run failure, 3 I/O error.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dilc/config.h"
#include "dilc/experiment.h"
#include "dilc/plants.h"
#include "dilc/trial_log.h"

namespace {

using dilc::harness::ConfigError;
using dilc::harness::ExperimentConfig;
using dilc::harness::IoError;

enum ExitCode : int { kOk = 0, kConfig = 1, kRun = 2, kIo = 3 };

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::string> out;
};

// --out beats the environment variable, which beats the file.
ExperimentConfig load_config(const std::string& path, const Overrides& o) {
  ExperimentConfig config = dilc::harness::parse_config(path);
  if (const char* env = std::getenv(dilc::harness::kOutputDirEnv);
      env != nullptr && *env != '\0') {
    config.output_dir = env;
  }
  if (o.out) config.output_dir = *o.out;
  if (o.seed) config.seed = *o.seed;
  if (o.trials) config.trials = *o.trials;
  dilc::harness::validate(config);
  return config;
}

std::string summary_line(const dilc::harness::RunArtifacts& a) {
  std::ostringstream s;
  s << "trials=" << a.summary.trials_completed << " final_normalized_error="
    << dilc::harness::format_real(a.summary.final_normalized_error)
    << " threshold_trial="
    << (a.summary.threshold_trial ? std::to_string(*a.summary.threshold_trial)
                                  : "none")
    << " condition_violations=" << a.summary.condition_violations;
  return s.str();
}

int run_one(const ExperimentConfig& config, std::ostream& out,
            std::ostream& err) {
  try {
    auto artifacts = dilc::harness::run_experiment(config);
    dilc::harness::emit_plot_data(artifacts);
    out << summary_line(artifacts) << "\n"
        << "log: " << artifacts.trial_log.string() << "\n";
    if (artifacts.failure) {
      err << "plant failure: " << *artifacts.failure << "\n";
      return kRun;
    }
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "run failure: " << e.what() << "\n";
    return kRun;
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& s) {
  const auto dots = s.find("..");
  auto parse = [&](std::string_view text) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ConfigError("seeds", "expected a range a..b, got '" + s + "'");
    }
    return v;
  };
  if (dots == std::string::npos) {
    const auto v = parse(s);
    return {v, v};
  }
  const std::string_view view(s);
  const auto lo = parse(view.substr(0, dots));
  const auto hi = parse(view.substr(dots + 2));
  if (hi < lo) throw ConfigError("seeds", "empty range '" + s + "'");
  return {lo, hi};
}

int sweep(const std::string& config_path, const std::string& seeds,
          const Overrides& overrides, unsigned jobs) {
  ExperimentConfig base;
  std::pair<std::uint64_t, std::uint64_t> range;
  try {
    base = load_config(config_path, overrides);
    range = parse_seed_range(seeds);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  }
  std::vector<std::uint64_t> list;
  for (std::uint64_t s = range.first;; ++s) {
    list.push_back(s);
    if (s == range.second) break;
  }
  std::vector<int> codes(list.size(), kOk);
  std::vector<std::string> outputs(list.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < list.size();) {
      ExperimentConfig cfg = base;
      cfg.seed = list[i];
      cfg.output_dir = base.output_dir / ("seed_" + std::to_string(list[i]));
      std::ostringstream out;
      codes[i] = run_one(cfg, out, out);
      outputs[i] = out.str();
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(list.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int worst = kOk;
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::cout << "seed " << list[i] << ": " << outputs[i];
    worst = std::max(worst, codes[i]);
  }
  return worst;
}

int check(const std::string& log_path, std::optional<long> channels) {
  try {
    const std::filesystem::path path(log_path);
    const auto rows = dilc::harness::read_trial_log(path);
    if (!channels) {
      const auto echo = path.parent_path() / dilc::harness::kConfigEchoName;
      if (!std::filesystem::exists(echo)) {
        std::cerr << "config error: --channels not given and no "
                  << echo.string() << " next to the log\n";
        return kConfig;
      }
      channels = dilc::harness::parse_config(echo).channels;
    }
    if (*channels < 1) throw ConfigError("channels", "must be at least 1");
    std::cout << dilc::harness::describe(dilc::harness::check_log(rows, *channels));
    return kOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual iterative learning control experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string log_path;
  std::string seeds;
  unsigned jobs = 0;
  std::optional<long> channels;
  Overrides overrides;

  auto* run = app.add_subcommand("run", "Run one experiment");
  run->add_option("--config", config_path, "JSON config file")->required();
  run->add_option("--seed", overrides.seed, "Root seed override");
  run->add_option("--trials", overrides.trials, "Trial count override");
  run->add_option("--out", overrides.out, "Output directory override");

  auto* sw = app.add_subcommand("sweep", "Run one experiment per seed");
  sw->add_option("--config", config_path, "JSON config file")->required();
  sw->add_option("--seeds", seeds, "Seed range a..b")->required();
  sw->add_option("--trials", overrides.trials, "Trial count override");
  sw->add_option("--out", overrides.out, "Output directory override");
  sw->add_option("--jobs", jobs, "Parallel runs (0: one per core)");

  auto* chk = app.add_subcommand("check", "Re-evaluate condition flags of a log");
  chk->add_option("--log", log_path, "Trial log CSV")->required();
  chk->add_option("--channels", channels,
                  "Channel count; read from the config echo when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfig;
  }

  if (*run) {
    ExperimentConfig config;
    try {
      config = load_config(config_path, overrides);
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return kConfig;
    }
    return run_one(config, std::cout, std::cerr);
  }
  if (*sw) return sweep(config_path, seeds, overrides, jobs);
  return check(log_path, channels);
}
