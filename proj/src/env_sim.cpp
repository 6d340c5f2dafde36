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

#include "warmstart/env_sim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>

namespace warmstart {

void UserModel::validate() const {
  if (p < 3) throw std::invalid_argument("UserModel: p must be >= 3, got " + std::to_string(p));
  if (!(sigma_s >= 0.0) || !(sigma_r >= 0.0)) throw std::invalid_argument("UserModel: noise scales must be >= 0");
  if (!beta.allFinite()) throw std::invalid_argument("UserModel: non-finite beta");
}

std::vector<UserModel> gen_user_models(int n, const NoiseScales& noise, int p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_user_models: n must be >= 1");
  if (p < 3) throw std::invalid_argument("gen_user_models: p must be >= 3");
  if (!(noise.sigma_b >= 0.0)) throw std::invalid_argument("gen_user_models: sigma_b must be >= 0");

  Rng rng(seed);
  std::vector<UserModel> models(static_cast<std::size_t>(n));
  for (UserModel& m : models) {
    for (int k = 0; k < kNumBeta; ++k) m.beta[k] = kBetaBasic[k] + noise.sigma_b * rng.normal();
    m.sigma_s = noise.sigma_s;
    m.sigma_r = noise.sigma_r;
    m.p = p;
    m.validate();
  }
  return models;
}

Eigen::MatrixXd initial_state_covariance(int p) {
  if (p < 3) throw std::invalid_argument("initial_state_covariance: p must be >= 3");
  Eigen::MatrixXd cov = Eigen::MatrixXd::Identity(p, p);
  cov.topLeftCorner<3, 3>() << 1.0, 0.3, -0.3,
                               0.3, 1.0, -0.3,
                              -0.3, -0.3, 1.0;
  return cov;
}

State draw_state(const Eigen::MatrixXd& factor, Rng& rng) {
  State z(factor.cols());
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = rng.normal();
  return factor * z;
}

State init_state(const UserModel& model, Rng& rng) {
  const Eigen::MatrixXd factor = initial_state_covariance(model.p).llt().matrixL();
  return draw_state(factor, rng);
}

State transition(const UserModel& model, const State& s_prev, Action a_prev, Rng& rng) {
  check_action(a_prev);
  if (s_prev.size() != model.p) throw std::invalid_argument("transition: state length differs from model p");
  const auto& b = model.beta;
  const double a = a_prev;

  State s(model.p);
  for (int j = 0; j < model.p; ++j) s[j] = model.sigma_s * rng.normal();
  s[0] += b[0] * s_prev[0];
  s[1] += b[1] * s_prev[1] + b[2] * a;
  s[2] += b[3] * s_prev[2] + b[4] * s_prev[2] * a + b[5] * a;
  for (int j = 3; j < model.p; ++j) s[j] += b[6] * s_prev[j];
  return s;
}

double reward(const UserModel& model, const State& s, Action a, double reward_noise) {
  check_action(a);
  const auto& b = model.beta;
  const double treat = a * (b[8] + b[9] * s[0] + b[10] * s[1]);
  return b[13] * (b[7] + treat + b[11] * s[0] - b[12] * s[2] + reward_noise);
}

std::pair<State, double> step(const UserModel& model, const State& s_prev, Action a_prev, Action a_curr, Rng& rng) {
  check_action(a_curr);
  State s = transition(model, s_prev, a_prev, rng);
  const double noise = model.sigma_r * rng.normal();
  const double r = reward(model, s, a_curr, noise);
  return {std::move(s), r};
}

PolicyFn constant_policy(Action a) {
  check_action(a);
  return [a](const State&, Rng&) { return a; };
}

PolicyFn random_policy(double p_treat) {
  return [p_treat](const State&, Rng& rng) { return rng.uniform() < p_treat ? Action{1} : Action{0}; };
}

Episode::Episode(const UserModel& model, Rng& rng) : Episode(model, init_state(model, rng), 0, rng) {}

Episode::Episode(const UserModel& model, const State& s0, Action a0, Rng& rng) : model_(model), rng_(rng) {
  model_.validate();
  if (s0.size() != model_.p) throw std::invalid_argument("Episode: initial state length differs from model p");
  state_ = transition(model_, s0, a0, rng_);
  reward_noise_ = model_.sigma_r * rng_.normal();
}

Tuple Episode::act(Action a, int user_id) {
  check_action(a);
  Tuple tup;
  tup.s = state_;
  tup.a = a;
  tup.r = reward(model_, state_, a, reward_noise_);
  tup.user_id = user_id;
  tup.t = t_;
  state_ = transition(model_, state_, a, rng_);
  reward_noise_ = model_.sigma_r * rng_.normal();
  tup.s_next = state_;
  ++t_;
  return tup;
}

Dataset rollout_from(const UserModel& model, const State& s0, Action a0, const PolicyFn& policy, int T, Rng& rng,
                     int user_id) {
  if (T < 1) throw std::invalid_argument("rollout: T must be >= 1");
  Episode episode(model, s0, a0, rng);
  Dataset data;
  data.tuples.reserve(static_cast<std::size_t>(T));
  for (int t = 0; t < T; ++t) {
    const Action a = policy(episode.state(), rng);
    data.tuples.push_back(episode.act(a, user_id));
  }
  return data;
}

Dataset rollout(const UserModel& model, const PolicyFn& policy, int T, Rng& rng, int user_id) {
  const State s0 = init_state(model, rng);
  return rollout_from(model, s0, 0, policy, T, rng, user_id);
}

}  // namespace warmstart
