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

#ifndef WARMSTART_LEARNER_HPP_
#define WARMSTART_LEARNER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "warmstart/actor.hpp"
#include "warmstart/critic.hpp"
#include "warmstart/dataset.hpp"
#include "warmstart/env_sim.hpp"
#include "warmstart/rng.hpp"

namespace warmstart {

enum class WarmStartMode { kRandom, kPrior };  // RWS, NWS

std::string to_string(WarmStartMode mode);
WarmStartMode parse_mode(const std::string& text);

// Settings shared by the batch learner and each online decision point.
struct ActorCriticSettings {
  double gamma = 0.0;
  double zeta_c = 1e-5;
  ActorConfig actor;  // actor.zeta_a is the actor ridge weight
  double alt_tol = 1e-4;
  int alt_max_iters = 50;

  void validate() const;
};

struct LearnerConfig {
  ActorCriticSettings ac;
  int T = 30;
  int T0 = 1;
  WarmStartMode mode = WarmStartMode::kPrior;
  std::uint64_t seed = 0;

  void validate() const;
};

struct PriorStudy {
  Dataset data;
  Eigen::VectorXd theta_bar;
};

struct PriorStudyConfig {
  int n_users = 40;
  int T_bar = 42;
  NoiseScales noise;
  int p = 3;
  ActorCriticSettings ac;

  void validate() const;
};

struct AlternationResult {
  Eigen::VectorXd w;
  Eigen::VectorXd theta;
  int iterations = 0;
  bool converged = false;
};

// Prior-study features built once per online run. The critic moments depend
// on theta only through the next-state features, so they are cached and
// recomputed only when theta (or gamma) changes.
class PriorBlock {
 public:
  explicit PriorBlock(const Dataset& data);

  const FeatureBatch<double>& batch() const { return batch_; }
  Eigen::Index size() const { return batch_.size(); }

  // Same value as critic_moments(batch(), theta, gamma).
  const CriticMoments<double>& moments(const Eigen::VectorXd& theta, double gamma);

 private:
  FeatureBatch<double> batch_;
  Eigen::VectorXd cached_theta_;
  double cached_gamma_ = 0.0;
  CriticMoments<double> cached_;
  bool has_cache_ = false;
};

// Alternates critic (LSTDQ) and actor (regularised ascent) updates from
// theta_init until successive thetas differ by less than alt_tol in the max norm
// or alt_max_iters rounds are done. With a prior block the warm-start forms are
// used.
AlternationResult alternate(const FeatureBatch<double>& data, PriorBlock* prior, const Eigen::VectorXd& theta_init,
                            const ActorCriticSettings& settings);

// theta <- 0, then alternate on the whole batch.
AlternationResult batch_learn(const Dataset& data, const ActorCriticSettings& settings);

// Simulates the earlier study: n_users users under the 0.5 random policy for
// T_bar decisions each, then learns its decision rule with batch_learn.
PriorStudy gen_prior_study(const PriorStudyConfig& config, std::uint64_t seed);

struct UpdateEvent {
  int t = 0;            // number of new-user tuples used
  Eigen::VectorXd theta;
  Eigen::VectorXd w;
  double reward = 0.0;  // reward of the most recent tuple
  int alt_iterations = 0;
  bool converged = false;
};

struct OnlineResult {
  Eigen::VectorXd theta;
  Dataset data;
  std::vector<UpdateEvent> trace;
};

// One new user's online learning.
//  RWS: decision points 0..T0-1 act with probability 0.5; at each t in [T0, T)
//       the learner is updated on the t tuples so far (theta starts at 0) and
//       then acts with the updated policy.
//  NWS: theta starts at the prior decision rule, which also picks the first
//       action; after each of the T tuples the warm-start learner is updated.
OnlineResult run_online(const UserModel& env_model, const PriorStudy* prior, const LearnerConfig& config, Rng& rng);

}  // namespace warmstart

#endif  // WARMSTART_LEARNER_HPP_
