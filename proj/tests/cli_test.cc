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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "dilc/trial_log.h"

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("dilc_cli_" +
             std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_);
    write("good.json",
          R"({"plant": {"name": "random_lti"}, "reference": {"name": "sine"},
              "trials": 4, "samples": 10, "output_dir": ")" +
              (root_ / "from_file").string() + R"("})");
  }
  void TearDown() override { fs::remove_all(root_); }

  void write(const std::string& name, const std::string& text) {
    std::ofstream(root_ / name) << text;
  }

  int cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " DILC_CLI_PATH " " + args + " > " +
                            (root_ / "stdout.txt").string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path cfg(const std::string& name) const { return root_ / name; }

  fs::path root_;
};

TEST_F(CliTest, RunWritesArtifacts) {
  ASSERT_EQ(cli("run --config " + cfg("good.json").string()), 0);
  EXPECT_TRUE(fs::exists(root_ / "from_file" / "trials.csv"));
  EXPECT_TRUE(fs::exists(root_ / "from_file" / "config.json"));
  EXPECT_TRUE(fs::exists(root_ / "from_file" / "normalized_error.csv"));
  EXPECT_EQ(dilc::harness::read_trial_log(root_ / "from_file" / "trials.csv").size(), 4u);
}

TEST_F(CliTest, OutputDirPrecedence) {
  ASSERT_EQ(cli("run --config " + cfg("good.json").string(),
                "DILC_OUTPUT_DIR=" + (root_ / "from_env").string()),
            0);
  EXPECT_TRUE(fs::exists(root_ / "from_env" / "trials.csv"));
  EXPECT_FALSE(fs::exists(root_ / "from_file"));
  ASSERT_EQ(cli("run --config " + cfg("good.json").string() + " --out " +
                    (root_ / "from_flag").string(),
                "DILC_OUTPUT_DIR=" + (root_ / "env2").string()),
            0);
  EXPECT_TRUE(fs::exists(root_ / "from_flag" / "trials.csv"));
  EXPECT_FALSE(fs::exists(root_ / "env2"));
}

TEST_F(CliTest, OverridesApply) {
  ASSERT_EQ(cli("run --config " + cfg("good.json").string() + " --trials 2 --out " +
                (root_ / "o").string()),
            0);
  EXPECT_EQ(dilc::harness::read_trial_log(root_ / "o" / "trials.csv").size(), 2u);
}

TEST_F(CliTest, ConfigErrorsExitOne) {
  write("bad.json", R"({"plant.name": "random_lti", "reference.name": "sine", "trials": 0})");
  EXPECT_EQ(cli("run --config " + cfg("bad.json").string()), 1);
  std::ifstream out(root_ / "stdout.txt");
  const std::string text((std::istreambuf_iterator<char>(out)), {});
  EXPECT_NE(text.find("trials"), std::string::npos);
  EXPECT_EQ(cli("run --config " + cfg("missing.json").string()), 1);
}

TEST_F(CliTest, IoErrorsExitThree) {
  write("file", "x");
  EXPECT_EQ(cli("run --config " + cfg("good.json").string() + " --out " +
                (root_ / "file" / "sub").string()),
            3);
  EXPECT_EQ(cli("check --log " + (root_ / "none.csv").string()), 3);
}

TEST_F(CliTest, PlantFailureExitsTwo) {
  write("fail.json",
        R"({"plant.name": "two_link_arm", "reference.name": "sine", "reference.amplitude": 1e150,
            "trials": 5, "samples": 30})");
  EXPECT_EQ(cli("run --config " + cfg("fail.json").string() + " --out " +
                (root_ / "f").string()),
            2);
  EXPECT_TRUE(fs::exists(root_ / "f" / "trials.csv"));
}

TEST_F(CliTest, CheckReadsLog) {
  ASSERT_EQ(cli("run --config " + cfg("good.json").string()), 0);
  EXPECT_EQ(cli("check --log " + (root_ / "from_file" / "trials.csv").string()), 0);
}

TEST_F(CliTest, SweepWritesOneDirectoryPerSeed) {
  ASSERT_EQ(cli("sweep --config " + cfg("good.json").string() + " --seeds 3..5 --jobs 2 --out " +
                (root_ / "sw").string()),
            0);
  for (int s = 3; s <= 5; ++s) {
    EXPECT_TRUE(fs::exists(root_ / "sw" / ("seed_" + std::to_string(s)) / "trials.csv"));
  }
}

}  // namespace
