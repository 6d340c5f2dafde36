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

#ifndef WARMSTART_EVALUATION_HPP_
#define WARMSTART_EVALUATION_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "warmstart/env_sim.hpp"
#include "warmstart/learner.hpp"
#include "warmstart/rng.hpp"

namespace warmstart {

// Mean of the last L rewards of an H-step rollout under pi_theta.
double long_run_avg_reward(const Eigen::VectorXd& theta, const UserModel& model, int H, int L, Rng& rng);

// As above from a fixed (S0, A0) initialisation.
double long_run_avg_reward_from(const Eigen::VectorXd& theta, const UserModel& model, const State& s0, int H, int L,
                                Rng& rng);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation (n - 1); 0 for a single value
};

MeanStd mean_std(const std::vector<double>& values);

// Long-run average reward per user (user u uses stream Rng::derive(seed, {u}))
// and its mean / sample std across users.
struct ElrarResult {
  MeanStd summary;
  std::vector<double> per_user;
};
ElrarResult elrar(const std::vector<Eigen::VectorXd>& theta_per_user, const std::vector<UserModel>& models, int H,
                  int L, std::uint64_t seed, int jobs = 1);

struct Arm {
  WarmStartMode mode = WarmStartMode::kPrior;
  int T0 = 1;

  // Stable identity used for RNG stream derivation, independent of position in
  // the arm list.
  std::uint64_t key() const { return (mode == WarmStartMode::kRandom ? 1000u : 2000u) + static_cast<std::uint64_t>(T0); }
  std::string label() const;
  bool operator==(const Arm&) const = default;
};

struct ExperimentConfig {
  std::vector<double> gammas{0.0, 0.2, 0.4, 0.6, 0.8, 0.95};
  std::vector<Arm> arms{{WarmStartMode::kRandom, 5}, {WarmStartMode::kRandom, 10}, {WarmStartMode::kPrior, 1}};
  int T = 30;
  int n_new_users = 50;
  int prior_users = 40;
  int prior_T = 42;
  NoiseScales noise;
  int p = 3;
  int H = 5000;
  int L = 4000;
  std::uint64_t seed = 0;
  double zeta_c = 1e-5;
  ActorConfig actor;
  double alt_tol = 1e-4;
  int alt_max_iters = 50;

  void validate() const;
  ActorCriticSettings settings(double gamma) const;
};

struct ArmResult {
  Arm arm;
  MeanStd summary;
  std::vector<double> per_user;
};

struct ResultsRow {
  double gamma = 0.0;
  std::vector<ArmResult> cells;  // config.arms order
};

struct ResultsTable {
  std::vector<ResultsRow> rows;  // config.gammas order

  const ArmResult& cell(double gamma, const Arm& arm) const;
};

// Random streams, all derived from config.seed:
//   prior study for gamma g     : derive(seed, {10, bits(g)})
//   new-user models for gamma g : derive(seed, {20, bits(g)})   (shared by all arms)
//   online run (g, arm, user u) : derive(seed, {30, bits(g), arm.key(), u})
//   evaluation rollouts (g, u)  : elrar seed derive(seed, {40, bits(g)}), then {u}
// so results do not depend on arm order, job count or scheduling.
ResultsTable run_experiment(const ExperimentConfig& config, int jobs = 1);

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception (by
// index) is rethrown after all workers finish.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

std::uint64_t gamma_key(double gamma);

}  // namespace warmstart

#endif  // WARMSTART_EVALUATION_HPP_
