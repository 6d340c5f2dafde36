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

#include "warmstart/learner.hpp"

#include <stdexcept>

#include "warmstart/features.hpp"

namespace warmstart {

std::string to_string(WarmStartMode mode) { return mode == WarmStartMode::kRandom ? "rws" : "nws"; }

WarmStartMode parse_mode(const std::string& text) {
  if (text == "rws" || text == "RWS") return WarmStartMode::kRandom;
  if (text == "nws" || text == "NWS") return WarmStartMode::kPrior;
  throw std::invalid_argument("unknown warm-start mode '" + text + "' (expected rws or nws)");
}

void ActorCriticSettings::validate() const {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in [0, 1)");
  if (!(zeta_c > 0.0)) throw std::invalid_argument("zeta_c must be positive");
  if (!(alt_tol > 0.0)) throw std::invalid_argument("alt_tol must be positive");
  if (alt_max_iters < 1) throw std::invalid_argument("alt_max_iters must be >= 1");
  actor.validate();
}

void LearnerConfig::validate() const {
  ac.validate();
  if (T < 1) throw std::invalid_argument("T must be >= 1");
  if (T0 < 1) throw std::invalid_argument("T0 must be >= 1");
  if (T0 > T) throw std::invalid_argument("T0 must not exceed T");
}

void PriorStudyConfig::validate() const {
  ac.validate();
  if (n_users < 1) throw std::invalid_argument("prior study needs at least one user");
  if (T_bar < 2) throw std::invalid_argument("prior study needs T_bar >= 2");
  if (p < 3) throw std::invalid_argument("p must be >= 3");
}

PriorBlock::PriorBlock(const Dataset& data) : batch_(FeatureBatch<double>::from(data)) {}

const CriticMoments<double>& PriorBlock::moments(const Eigen::VectorXd& theta, double gamma) {
  if (!has_cache_ || gamma != cached_gamma_ || theta != cached_theta_) {
    cached_ = critic_moments(batch_, theta, gamma);
    cached_theta_ = theta;
    cached_gamma_ = gamma;
    has_cache_ = true;
  }
  return cached_;
}

AlternationResult alternate(const FeatureBatch<double>& data, PriorBlock* prior, const Eigen::VectorXd& theta_init,
                            const ActorCriticSettings& settings) {
  AlternationResult out;
  out.theta = theta_init;
  for (int k = 1; k <= settings.alt_max_iters; ++k) {
    const ActorObjective<double> objective = [&] {
      if (prior == nullptr) {
        out.w = lstdq(data, out.theta, settings.gamma, settings.zeta_c);
        return ActorObjective<double>::plain(data, out.w, settings.actor.zeta_a);
      }
      out.w = lstdq_warm(prior->moments(out.theta, settings.gamma), data, out.theta, settings.gamma, settings.zeta_c);
      return ActorObjective<double>::warm(ActorBlock<double>::from(prior->batch(), out.w), data, out.w,
                                          settings.actor.zeta_a);
    }();
    const ActorResult<double> step = maximize_actor(objective, out.theta, settings.actor);
    const double change = (step.theta - out.theta).lpNorm<Eigen::Infinity>();
    out.theta = step.theta;
    out.iterations = k;
    if (change < settings.alt_tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

AlternationResult batch_learn(const Dataset& data, const ActorCriticSettings& settings) {
  settings.validate();
  if (data.size() < 2) throw std::invalid_argument("batch_learn: need at least two tuples");
  const auto batch = FeatureBatch<double>::from(data);
  return alternate(batch, nullptr, Eigen::VectorXd::Zero(batch.policy_dim()), settings);
}

PriorStudy gen_prior_study(const PriorStudyConfig& config, std::uint64_t seed) {
  config.validate();
  const auto models = gen_user_models(config.n_users, config.noise, config.p, Rng::derive(seed, {1}).engine()());

  PriorStudy study;
  study.data.kind = DatasetKind::kPrior;
  study.data.tuples.reserve(static_cast<std::size_t>(config.n_users) * static_cast<std::size_t>(config.T_bar));
  const PolicyFn behaviour = random_policy(0.5);
  for (int u = 0; u < config.n_users; ++u) {
    Rng rng = Rng::derive(seed, {2, static_cast<std::uint64_t>(u)});
    Dataset traj = rollout(models[static_cast<std::size_t>(u)], behaviour, config.T_bar, rng, u);
    for (Tuple& tup : traj.tuples) study.data.tuples.push_back(std::move(tup));
  }
  study.theta_bar = batch_learn(study.data, config.ac).theta;
  return study;
}

OnlineResult run_online(const UserModel& env_model, const PriorStudy* prior, const LearnerConfig& config, Rng& rng) {
  config.validate();
  env_model.validate();
  const Eigen::Index q = policy_feature_dim(env_model.p);

  OnlineResult out;
  out.data.kind = DatasetKind::kOnline;
  out.data.tuples.reserve(static_cast<std::size_t>(config.T));
  Episode episode(env_model, rng);

  auto record = [&out](int t, const AlternationResult& res) {
    UpdateEvent ev;
    ev.t = t;
    ev.theta = res.theta;
    ev.w = res.w;
    ev.reward = out.data.tuples.back().r;
    ev.alt_iterations = res.iterations;
    ev.converged = res.converged;
    out.trace.push_back(std::move(ev));
  };

  if (config.mode == WarmStartMode::kRandom) {
    out.theta = Eigen::VectorXd::Zero(q);
    for (int t = 0; t < config.T; ++t) {
      Action a;
      if (t < config.T0) {
        a = rng.uniform() < 0.5 ? 1 : 0;
      } else {
        const auto res = alternate(FeatureBatch<double>::from(out.data), nullptr, out.theta, config.ac);
        out.theta = res.theta;
        record(t, res);
        a = sample_action(out.theta, episode.state(), rng);
      }
      out.data.tuples.push_back(episode.act(a));
    }
    return out;
  }

  if (prior == nullptr) throw std::invalid_argument("run_online: nws mode requires a prior study");
  if (prior->theta_bar.size() != q) throw std::invalid_argument("run_online: prior decision rule has wrong length");
  PriorBlock block(prior->data);
  if (block.batch().policy_dim() != q) throw std::invalid_argument("run_online: prior data has wrong state dimension");

  out.theta = prior->theta_bar;
  for (int t = 0; t < config.T; ++t) {
    const Action a = sample_action(out.theta, episode.state(), rng);
    out.data.tuples.push_back(episode.act(a));
    const auto res = alternate(FeatureBatch<double>::from(out.data), &block, out.theta, config.ac);
    out.theta = res.theta;
    record(t + 1, res);
  }
  return out;
}

}  // namespace warmstart
