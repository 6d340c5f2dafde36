/* Copyright 2026 The Warmstart Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <filesystem>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "warmstart/io.hpp"

namespace warmstart {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("warmstart_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

int count_lines(const std::string& file) {
  const std::string text = io::read_text(file);
  return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

void expect_one_line_error(const CliRun& r, const std::string& needle) {
  EXPECT_NE(r.code, 0);
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  EXPECT_NE(r.err.find(needle), std::string::npos) << r.err;
}

TEST_F(Cli, GenPriorWritesDataSidecarAndManifest) {
  const auto r = invoke({"gen-prior", "--users", "40", "--T", "42", "--seed", "7", "--out", path("prior")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(path("prior/prior.csv")), 1681);
  const auto side = nlohmann::json::parse(io::read_text(path("prior/prior.json")));
  EXPECT_EQ(side["theta_bar"].size(), 4u);
  const auto manifest = nlohmann::json::parse(io::read_text(path("prior/manifest.json")));
  EXPECT_EQ(manifest["seed"], 7);
  EXPECT_EQ(manifest["config"]["users"], 40);
  EXPECT_EQ(manifest["version"], cli::kToolVersion);
  EXPECT_TRUE(manifest.contains("timestamp"));
}

TEST_F(Cli, GenPriorIsReproducible) {
  ASSERT_EQ(invoke({"gen-prior", "--users", "3", "--T", "5", "--seed", "2", "--out", path("a")}).code, 0);
  ASSERT_EQ(invoke({"gen-prior", "--users", "3", "--T", "5", "--seed", "2", "--out", path("b")}).code, 0);
  EXPECT_EQ(io::read_text(path("a/prior.csv")), io::read_text(path("b/prior.csv")));
  EXPECT_EQ(io::read_text(path("a/prior.json")), io::read_text(path("b/prior.json")));
  // The manifest alone reproduces the run.
  ASSERT_EQ(invoke({"gen-prior", "--config", path("a/manifest.json"), "--out", path("c")}).code, 0);
  EXPECT_EQ(io::read_text(path("a/prior.csv")), io::read_text(path("c/prior.csv")));
}

TEST_F(Cli, ZeroUsersNamesTheFlag) {
  expect_one_line_error(invoke({"gen-prior", "--users", "0", "--out", path("x")}), "--users");
  EXPECT_FALSE(fs::exists(path("x")));
}

TEST_F(Cli, ConfigFileSuppliesFlagsAndCommandLineWins) {
  io::write_text(path("flags.json"), R"({"users": 2, "T": 4, "seed": 5})");
  ASSERT_EQ(invoke({"gen-prior", "--config", path("flags.json"), "--T", "3", "--out", path("p")}).code, 0);
  EXPECT_EQ(count_lines(path("p/prior.csv")), 1 + 2 * 3);
  io::write_text(path("bad.json"), R"({"users": 2, "speed": 4})");
  expect_one_line_error(invoke({"gen-prior", "--config", path("bad.json")}), "'speed'");
}

TEST_F(Cli, RunOnlineRandomWarmStartTrace) {
  const auto r = invoke({"run-online", "--mode", "rws", "--t0", "10", "--T", "30", "--gamma", "0", "--seed", "3",
                         "--out", path("rws")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(path("rws/trace.csv")), 1 + 20);
  EXPECT_EQ(count_lines(path("rws/data.csv")), 1 + 30);
  EXPECT_TRUE(fs::exists(path("rws/theta.json")));
  EXPECT_TRUE(fs::exists(path("rws/manifest.json")));
}

TEST_F(Cli, RunOnlinePriorWarmStartTrace) {
  ASSERT_EQ(invoke({"gen-prior", "--users", "4", "--T", "10", "--gamma", "0.4", "--out", path("prior")}).code, 0);
  const auto r = invoke({"run-online", "--mode", "nws", "--prior", path("prior"), "--T", "30", "--gamma", "0.4",
                         "--out", path("nws")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(path("nws/trace.csv")), 1 + 30);
}

TEST_F(Cli, RunOnlineValidation) {
  expect_one_line_error(invoke({"run-online", "--gamma", "1.0", "--out", path("x")}), "--gamma");
  expect_one_line_error(invoke({"run-online", "--mode", "nws", "--out", path("x")}), "--prior");
  expect_one_line_error(invoke({"run-online", "--mode", "sometimes", "--out", path("x")}), "--mode");
  expect_one_line_error(invoke({"run-online", "--mode", "nws", "--prior", path("missing"), "--out", path("x")}),
                        "missing");
}

TEST_F(Cli, LearnBatchAndEvaluate) {
  ASSERT_EQ(invoke({"gen-prior", "--users", "3", "--T", "8", "--out", path("prior")}).code, 0);
  auto r = invoke({"learn-batch", "--data", path("prior/prior.csv"), "--gamma", "0.2", "--out", path("batch")});
  ASSERT_EQ(r.code, 0) << r.err;
  r = invoke({"evaluate", "--theta", path("batch/theta.json"), "--users", "3", "--H", "200", "--L", "100", "--out",
              path("eval")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ev = nlohmann::json::parse(io::read_text(path("eval/evaluation.json")));
  EXPECT_EQ(ev["per_user"].size(), 3u);
  expect_one_line_error(invoke({"evaluate", "--theta-values", "1,2", "--out", path("e2")}), "--theta-values");
  expect_one_line_error(invoke({"learn-batch", "--out", path("e3")}), "--data");
}

TEST_F(Cli, ExperimentDryRunPrintsManifestOnly) {
  const auto r = invoke({"experiment", "--dry-run", "--out", path("res")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = nlohmann::json::parse(r.out);
  EXPECT_EQ(m["config"]["gammas"].size(), 6u);
  EXPECT_EQ(m["config"]["arms"].size(), 3u);
  EXPECT_EQ(m["command"], "experiment");
  EXPECT_FALSE(fs::exists(path("res")));
}

TEST_F(Cli, ExperimentConfigErrors) {
  io::write_text(path("unknown.json"), R"({"gammas": [0], "colour": "red"})");
  expect_one_line_error(invoke({"experiment", "--config", path("unknown.json")}), "'colour'");
  io::write_text(path("broken.json"), "{\n \"gammas\": [0,\n");
  expect_one_line_error(invoke({"experiment", "--config", path("broken.json")}), "line");
  expect_one_line_error(invoke({"experiment", "--gammas", "0,1.5", "--dry-run"}), "--gammas");
}

TEST_F(Cli, SmallExperimentWritesAllOutputs) {
  io::write_text(path("cfg.json"), R"({"gammas": [0], "arms": [{"mode": "rws", "T0": 2}, {"mode": "nws", "T0": 1}],
    "T": 3, "n_new_users": 2, "prior_users": 3, "prior_T": 5, "H": 200, "L": 100, "alt_max_iters": 5})");
  const auto r = invoke({"experiment", "--config", path("cfg.json"), "--out", path("res"), "--jobs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(path("res/results.csv")), 1 + 2);
  EXPECT_TRUE(fs::exists(path("res/results.json")));
  EXPECT_TRUE(fs::exists(path("res/manifest.json")));
  EXPECT_NE(r.out.find("NWS-RL_T0=1"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  expect_one_line_error(invoke({}), "usage");
  expect_one_line_error(invoke({"fly"}), "usage");
  expect_one_line_error(invoke({"gen-prior", "--users", "many"}), "usage");
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

}  // namespace
}  // namespace warmstart
