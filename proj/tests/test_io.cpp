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

#include "test_support.hpp"
#include "warmstart/io.hpp"

namespace warmstart {
namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("warmstart_io_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

TEST(DatasetCsv, RoundTripsBitForBit) {
  Rng rng(1);
  Dataset d = testing::random_dataset(17, 4, rng, 1e3);
  d.tuples[3].r = 1.0 / 3.0;
  std::stringstream buf;
  io::write_dataset_csv(buf, d);
  const Dataset back = io::read_dataset_csv(buf);
  ASSERT_EQ(back.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(back[i].s, d[i].s);
    EXPECT_EQ(back[i].s_next, d[i].s_next);
    EXPECT_EQ(back[i].r, d[i].r);
    EXPECT_EQ(back[i].a, d[i].a);
    EXPECT_EQ(back[i].t, d[i].t);
    EXPECT_EQ(back[i].user_id, d[i].user_id);
  }
}

TEST(DatasetCsv, HeaderLayout) {
  Rng rng(2);
  std::stringstream buf;
  io::write_dataset_csv(buf, testing::random_dataset(1, 3, rng));
  std::string header;
  std::getline(buf, header);
  EXPECT_EQ(header, "user_id,t,s1,s2,s3,a,r,sn1,sn2,sn3");
}

TEST(DatasetCsv, MalformedRowsNameTheLine) {
  std::stringstream bad("user_id,t,s1,s2,s3,a,r,sn1,sn2,sn3\n0,0,1,2,3,1,5,1,2,3\n0,1,1,2,x,0,5,1,2,3\n");
  try {
    io::read_dataset_csv(bad);
    FAIL() << "expected FormatError";
  } catch (const io::FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::stringstream short_row("user_id,t,s1,s2,s3,a,r,sn1,sn2,sn3\n0,0,1,2\n");
  EXPECT_THROW(io::read_dataset_csv(short_row), io::FormatError);
}

TEST(PriorStudyFiles, RoundTrip) {
  TempDir tmp;
  Rng rng(3);
  PriorStudy study;
  study.data = testing::random_dataset(12, 3, rng);
  study.data.kind = DatasetKind::kPrior;
  study.theta_bar = testing::random_vector(4, rng);
  io::write_prior_study(tmp.path / "prior", study, {study.theta_bar, 0.4, 1e-5, 2e-5, 99});
  io::PriorSidecar meta;
  const PriorStudy back = io::read_prior_study(tmp.path / "prior", &meta);
  EXPECT_EQ(back.theta_bar, study.theta_bar);
  EXPECT_EQ(back.data.size(), 12u);
  EXPECT_EQ(back.data[5].r, study.data[5].r);
  EXPECT_EQ(meta.gamma, 0.4);
  EXPECT_EQ(meta.seed, 99u);
}

TEST(ExperimentConfigJson, RoundTrip) {
  ExperimentConfig c;
  c.gammas = {0.1, 1.0 / 3.0};
  c.arms = {{WarmStartMode::kRandom, 7}};
  c.seed = 123456789012345ull;
  c.actor.grad_tol = 3e-7;
  const ExperimentConfig back = io::parse_experiment_config(io::experiment_config_to_json(c).dump());
  EXPECT_EQ(back.gammas, c.gammas);
  EXPECT_EQ(back.arms, c.arms);
  EXPECT_EQ(back.seed, c.seed);
  EXPECT_EQ(back.actor.grad_tol, c.actor.grad_tol);
  EXPECT_EQ(io::experiment_config_to_json(back), io::experiment_config_to_json(c));
}

TEST(ExperimentConfigJson, PartialDocumentKeepsDefaults) {
  const ExperimentConfig c = io::parse_experiment_config(R"({"n_new_users": 10, "gammas": [0, 0.8]})");
  EXPECT_EQ(c.n_new_users, 10);
  EXPECT_EQ(c.gammas, (std::vector<double>{0.0, 0.8}));
  EXPECT_EQ(c.H, 5000);
  EXPECT_EQ(c.arms.size(), 3u);
}

TEST(ExperimentConfigJson, UnknownKeyIsNamed) {
  try {
    io::parse_experiment_config(R"({"gammas": [0], "n_users": 3})");
    FAIL() << "expected FormatError";
  } catch (const io::FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("'n_users'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::parse_experiment_config(R"({"actor": {"speed": 1}})"), io::FormatError);
}

TEST(ExperimentConfigJson, SyntaxErrorsGiveLineAndColumn) {
  try {
    io::parse_experiment_config("{\n  \"T\": 30,\n  \"H\": ]\n}");
    FAIL() << "expected FormatError";
  } catch (const io::FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ExperimentConfigJson, WrongTypesAreRejected) {
  EXPECT_THROW(io::parse_experiment_config(R"({"T": "thirty"})"), io::FormatError);
  EXPECT_THROW(io::parse_experiment_config(R"({"arms": [{"mode": "xws", "T0": 1}]})"), std::exception);
  EXPECT_THROW(io::parse_experiment_config("[1, 2]"), io::FormatError);
}

TEST(ResultsCsv, ColumnsAndRows) {
  ResultsTable t;
  ResultsRow row;
  row.gamma = 0.5;
  ArmResult cell;
  cell.arm = {WarmStartMode::kRandom, 5};
  cell.per_user = {1.0, 3.0};
  cell.summary = mean_std(cell.per_user);
  row.cells.push_back(cell);
  t.rows.push_back(row);
  ExperimentConfig c;
  c.seed = 4;
  std::stringstream out;
  io::write_results_csv(out, t, c);
  EXPECT_EQ(out.str(), "gamma,arm,mean,std,n_users,T,T0,seed\n0.5,RWS-RL_T0=5,2,1.4142135623730951,2,30,5,4\n");
  const auto j = io::results_to_json(t, c);
  EXPECT_EQ(j["rows"][0]["arms"][0]["per_user"].size(), 2u);
  EXPECT_EQ(j["std_definition"], "sample standard deviation across users");
  EXPECT_NE(io::format_results_table(t).find("RWS-RL_T0=5"), std::string::npos);
}

TEST(FormatReal, SeventeenDigitsRoundTrip) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(gen);
    EXPECT_EQ(std::stod(io::format_real(v)), v);
  }
}

}  // namespace
}  // namespace warmstart
