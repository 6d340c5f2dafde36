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

#include "warmstart/evaluation.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "warmstart/features.hpp"

namespace warmstart {

namespace {

double tail_mean(const Dataset& data, int L) {
  double sum = 0.0;
  for (std::size_t i = data.size() - static_cast<std::size_t>(L); i < data.size(); ++i) sum += data[i].r;
  return sum / L;
}

PolicyFn logistic_policy(const Eigen::VectorXd& theta) {
  return [theta](const State& s, Rng& rng) { return sample_action(theta, s, rng); };
}

void check_horizon(int H, int L) {
  if (L < 1 || H < 1 || L >= H) throw std::invalid_argument("evaluation: need 1 <= L < H");
}

}  // namespace

double long_run_avg_reward(const Eigen::VectorXd& theta, const UserModel& model, int H, int L, Rng& rng) {
  check_horizon(H, L);
  return tail_mean(rollout(model, logistic_policy(theta), H, rng), L);
}

double long_run_avg_reward_from(const Eigen::VectorXd& theta, const UserModel& model, const State& s0, int H, int L,
                                Rng& rng) {
  check_horizon(H, L);
  return tail_mean(rollout_from(model, s0, 0, logistic_policy(theta), H, rng), L);
}

MeanStd mean_std(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("mean_std: no values");
  MeanStd out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return out;
}

ElrarResult elrar(const std::vector<Eigen::VectorXd>& theta_per_user, const std::vector<UserModel>& models, int H,
                  int L, std::uint64_t seed, int jobs) {
  if (theta_per_user.empty() || theta_per_user.size() != models.size()) {
    throw std::invalid_argument("elrar: need equally many (>= 1) policies and user models");
  }
  check_horizon(H, L);
  ElrarResult out;
  out.per_user.resize(models.size());
  parallel_for(static_cast<int>(models.size()), jobs, [&](int u) {
    Rng rng = Rng::derive(seed, {static_cast<std::uint64_t>(u)});
    out.per_user[static_cast<std::size_t>(u)] =
        long_run_avg_reward(theta_per_user[static_cast<std::size_t>(u)], models[static_cast<std::size_t>(u)], H, L, rng);
  });
  out.summary = mean_std(out.per_user);
  return out;
}

std::string Arm::label() const {
  return fmt::format("{}-RL_T0={}", mode == WarmStartMode::kRandom ? "RWS" : "NWS", T0);
}

void ExperimentConfig::validate() const {
  if (gammas.empty()) throw std::invalid_argument("gammas: at least one value required");
  for (double g : gammas) {
    if (!(g >= 0.0 && g < 1.0)) throw std::invalid_argument(fmt::format("gammas: {} is outside [0, 1)", g));
  }
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    for (std::size_t j = i + 1; j < gammas.size(); ++j) {
      if (gammas[i] == gammas[j]) throw std::invalid_argument("gammas: duplicate value");
    }
  }
  if (arms.empty()) throw std::invalid_argument("arms: at least one arm required");
  for (std::size_t i = 0; i < arms.size(); ++i) {
    if (arms[i].T0 < 1 || arms[i].T0 > T) throw std::invalid_argument("arms: T0 must lie in [1, T]");
    for (std::size_t j = i + 1; j < arms.size(); ++j) {
      if (arms[i] == arms[j]) throw std::invalid_argument("arms: duplicate arm " + arms[i].label());
    }
  }
  if (T < 1) throw std::invalid_argument("T must be >= 1");
  if (n_new_users < 1) throw std::invalid_argument("n_new_users must be >= 1");
  if (prior_users < 1) throw std::invalid_argument("prior_users must be >= 1");
  if (prior_T < 2) throw std::invalid_argument("prior_T must be >= 2");
  if (!(noise.sigma_s >= 0.0 && noise.sigma_r >= 0.0 && noise.sigma_b >= 0.0)) {
    throw std::invalid_argument("noise scales must be >= 0");
  }
  if (p < 3) throw std::invalid_argument("p must be >= 3");
  check_horizon(H, L);
  settings(gammas.front()).validate();
}

ActorCriticSettings ExperimentConfig::settings(double gamma) const {
  ActorCriticSettings s;
  s.gamma = gamma;
  s.zeta_c = zeta_c;
  s.actor = actor;
  s.alt_tol = alt_tol;
  s.alt_max_iters = alt_max_iters;
  return s;
}

const ArmResult& ResultsTable::cell(double gamma, const Arm& arm) const {
  for (const auto& row : rows) {
    if (row.gamma != gamma) continue;
    for (const auto& c : row.cells) {
      if (c.arm == arm) return c;
    }
  }
  throw std::out_of_range("results: no cell for gamma " + fmt::format("{}", gamma) + " and arm " + arm.label());
}

std::uint64_t gamma_key(double gamma) { return std::bit_cast<std::uint64_t>(gamma); }

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  const int workers = std::max(1, std::min(jobs, n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int k = 0; k < workers; ++k) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

ResultsTable run_experiment(const ExperimentConfig& config, int jobs) {
  config.validate();
  const std::size_t n_gamma = config.gammas.size();
  const std::size_t n_arm = config.arms.size();
  const auto n_user = static_cast<std::size_t>(config.n_new_users);

  PriorStudyConfig prior_cfg;
  prior_cfg.n_users = config.prior_users;
  prior_cfg.T_bar = config.prior_T;
  prior_cfg.noise = config.noise;
  prior_cfg.p = config.p;

  std::vector<PriorStudy> priors(n_gamma);
  std::vector<std::vector<UserModel>> users(n_gamma);
  parallel_for(static_cast<int>(n_gamma), jobs, [&](int g) {
    const double gamma = config.gammas[static_cast<std::size_t>(g)];
    const std::uint64_t gk = gamma_key(gamma);
    PriorStudyConfig pc = prior_cfg;
    pc.ac = config.settings(gamma);
    try {
      priors[static_cast<std::size_t>(g)] = gen_prior_study(pc, Rng::derive(config.seed, {10, gk}).engine()());
    } catch (const std::exception& e) {
      throw std::runtime_error(fmt::format("prior study failed (gamma={}): {}", gamma, e.what()));
    }
    users[static_cast<std::size_t>(g)] =
        gen_user_models(config.n_new_users, config.noise, config.p, Rng::derive(config.seed, {20, gk}).engine()());
  });

  // Online learning followed by evaluation, one task per (gamma, arm, user).
  std::vector<double> eta(n_gamma * n_arm * n_user);
  parallel_for(static_cast<int>(eta.size()), jobs, [&](int task) {
    const auto idx = static_cast<std::size_t>(task);
    const std::size_t g = idx / (n_arm * n_user);
    const std::size_t a = (idx / n_user) % n_arm;
    const std::size_t u = idx % n_user;
    const double gamma = config.gammas[g];
    const Arm& arm = config.arms[a];
    const std::uint64_t gk = gamma_key(gamma);
    try {
      LearnerConfig lc;
      lc.ac = config.settings(gamma);
      lc.T = config.T;
      lc.T0 = arm.T0;
      lc.mode = arm.mode;
      Rng online_rng = Rng::derive(config.seed, {30, gk, arm.key(), u});
      const OnlineResult run = run_online(users[g][u], &priors[g], lc, online_rng);

      Rng eval_rng = Rng::derive(Rng::derive(config.seed, {40, gk}).engine()(), {u});
      eta[idx] = long_run_avg_reward(run.theta, users[g][u], config.H, config.L, eval_rng);
    } catch (const std::exception& e) {
      throw std::runtime_error(
          fmt::format("experiment failed (gamma={}, arm={}, user={}): {}", gamma, arm.label(), u, e.what()));
    }
  });

  ResultsTable table;
  table.rows.resize(n_gamma);
  for (std::size_t g = 0; g < n_gamma; ++g) {
    table.rows[g].gamma = config.gammas[g];
    for (std::size_t a = 0; a < n_arm; ++a) {
      ArmResult cell;
      cell.arm = config.arms[a];
      const auto first = eta.begin() + static_cast<std::ptrdiff_t>((g * n_arm + a) * n_user);
      cell.per_user.assign(first, first + static_cast<std::ptrdiff_t>(n_user));
      cell.summary = mean_std(cell.per_user);
      table.rows[g].cells.push_back(std::move(cell));
    }
  }
  return table;
}

}  // namespace warmstart
