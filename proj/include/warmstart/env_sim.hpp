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

#ifndef WARMSTART_ENV_SIM_HPP_
#define WARMSTART_ENV_SIM_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "warmstart/dataset.hpp"
#include "warmstart/rng.hpp"

namespace warmstart {

inline constexpr int kNumBeta = 14;

// Coefficients of the population-average user. The source table lists a
// fifteenth value (1.50) between beta13 and the reward scale; it is not used by
// the dynamics, and beta14 is the reward scale 800.
inline constexpr std::array<double, kNumBeta> kBetaBasic = {
    0.40, 0.25, 0.35, 0.65, 0.10, 0.50, 0.22, 2.00, 0.15, 0.20, 0.32, 0.10, 0.45, 800.0};

// One simulated user's MDP. beta is 1-indexed in the usual model notation; here
// beta[0] is beta1.
struct UserModel {
  Eigen::Matrix<double, kNumBeta, 1> beta = Eigen::Map<const Eigen::Matrix<double, kNumBeta, 1>>(kBetaBasic.data());
  double sigma_s = 1.0;
  double sigma_r = 1.0;
  int p = 3;

  void validate() const;
};

struct NoiseScales {
  double sigma_s = 1.0;
  double sigma_r = 1.0;
  double sigma_b = 0.005;
};

// n users with beta_i = beta_basic + delta_i, delta_i ~ Normal(0, sigma_b^2 I).
std::vector<UserModel> gen_user_models(int n, const NoiseScales& noise, int p, std::uint64_t seed);

// Block-diagonal initial-state covariance: the 3x3 correlated block followed by
// an identity on coordinates 4..p.
Eigen::MatrixXd initial_state_covariance(int p);

// S0 ~ Normal(0, Sigma).
State init_state(const UserModel& model, Rng& rng);

// L * z with z ~ Normal(0, I); `factor` is any square root of the covariance.
// A zero factor yields the zero state.
State draw_state(const Eigen::MatrixXd& factor, Rng& rng);

// Transition S_{t-1}, A_{t-1} -> S_t. Draws xi_1..xi_p from rng in order.
State transition(const UserModel& model, const State& s_prev, Action a_prev, Rng& rng);

// Immediate reward for state S_t and action A_t with an explicit reward-noise
// draw (in units of sigma_r already applied).
double reward(const UserModel& model, const State& s, Action a, double reward_noise);

// Transition then reward; draws xi_1..xi_p then rho.
std::pair<State, double> step(const UserModel& model, const State& s_prev, Action a_prev, Action a_curr, Rng& rng);

// Maps a state (and the stream) to an action. The stream is shared with the
// environment so a rollout is reproducible from one seed.
using PolicyFn = std::function<Action(const State&, Rng&)>;

PolicyFn constant_policy(Action a);
PolicyFn random_policy(double p_treat = 0.5);

// T tuples. The episode is initialised with S0 ~ init_state and A0 = 0; the
// first decision is taken at S1 = transition(S0, A0). Per decision the stream
// is consumed as xi_1..xi_p, rho, then the policy's draws. Tuple i (time index
// i) is (S, A, R, S') at the (i+1)-th decision.
Dataset rollout(const UserModel& model, const PolicyFn& policy, int T, Rng& rng, int user_id = 0);

// Same as rollout but with a given (S0, A0) initialisation.
Dataset rollout_from(const UserModel& model, const State& s0, Action a0, const PolicyFn& policy, int T, Rng& rng,
                     int user_id = 0);

// Incremental form of rollout, used by the online learner which chooses each
// action itself.
class Episode {
 public:
  Episode(const UserModel& model, Rng& rng);
  Episode(const UserModel& model, const State& s0, Action a0, Rng& rng);

  // State at the current decision point.
  const State& state() const { return state_; }
  int time() const { return t_; }

  // Commits the action at the current decision point and returns the
  // completed tuple; the episode then sits at the next decision point.
  Tuple act(Action a, int user_id = 0);

 private:
  void advance();

  UserModel model_;
  Rng& rng_;
  State state_;
  double reward_noise_ = 0.0;
  int t_ = 0;
};

}  // namespace warmstart

#endif  // WARMSTART_ENV_SIM_HPP_
