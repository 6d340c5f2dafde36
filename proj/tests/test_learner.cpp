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

#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "warmstart/learner.hpp"

namespace warmstart {
namespace {

using testing::max_abs_diff;

ActorCriticSettings settings(double gamma) {
  ActorCriticSettings s;
  s.gamma = gamma;
  return s;
}

PriorStudy small_prior(double gamma, std::uint64_t seed) {
  PriorStudyConfig pc;
  pc.n_users = 5;
  pc.T_bar = 10;
  pc.ac = settings(gamma);
  return gen_prior_study(pc, seed);
}

TEST(GenPriorStudy, DefaultSizedStudy) {
  PriorStudyConfig pc;
  const PriorStudy study = gen_prior_study(pc, 7);
  EXPECT_EQ(study.data.size(), 1680u);
  EXPECT_EQ(study.data.kind, DatasetKind::kPrior);
  EXPECT_NO_THROW(study.data.validate());
  EXPECT_EQ(study.theta_bar.size(), 4);
  EXPECT_TRUE(study.theta_bar.allFinite());
}

TEST(GenPriorStudy, MinimalStudy) {
  PriorStudyConfig pc;
  pc.n_users = 1;
  pc.T_bar = 2;
  const PriorStudy study = gen_prior_study(pc, 1);
  EXPECT_EQ(study.data.size(), 2u);
  EXPECT_TRUE(study.theta_bar.allFinite());
}

TEST(GenPriorStudy, Deterministic) {
  const PriorStudy a = small_prior(0.4, 3), b = small_prior(0.4, 3);
  EXPECT_EQ(a.theta_bar, b.theta_bar);
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    EXPECT_EQ(a.data[i].s, b.data[i].s);
    EXPECT_EQ(a.data[i].r, b.data[i].r);
    EXPECT_EQ(a.data[i].a, b.data[i].a);
  }
  EXPECT_NE(small_prior(0.4, 4).theta_bar, a.theta_bar);
}

TEST(BatchLearn, IndifferentRewardsDriveThetaToZero) {
  Rng rng(1);
  Dataset d = testing::random_dataset(40, 3, rng);
  for (auto& t : d.tuples) t.r = 1.0 + 2.0 * t.s[0] - t.s[2];
  // A tiny critic ridge keeps the fitted advantage near zero and a unit actor
  // ridge keeps theta of the same order.
  ActorCriticSettings s = settings(0.0);
  s.zeta_c = 1e-10;
  s.actor.zeta_a = 1.0;
  const auto res = batch_learn(d, s);
  EXPECT_TRUE(res.converged);
  EXPECT_LT(res.theta.lpNorm<Eigen::Infinity>(), 1e-6);
  EXPECT_LT(res.w.segment(4, 4).lpNorm<Eigen::Infinity>(), 1e-6);
}

TEST(BatchLearn, SingleRoundDoesOneCriticAndActorUpdate) {
  Rng rng(2);
  const Dataset d = testing::random_dataset(20, 3, rng);
  ActorCriticSettings s = settings(0.5);
  s.alt_max_iters = 1;
  const auto res = batch_learn(d, s);
  EXPECT_EQ(res.iterations, 1);
  const auto batch = FeatureBatch<double>::from(d);
  const Eigen::VectorXd w = lstdq(batch, testing::zeros(4), 0.5, s.zeta_c);
  const auto obj = ActorObjective<double>::plain(batch, w, s.actor.zeta_a);
  EXPECT_EQ(res.w, w);
  EXPECT_EQ(res.theta, maximize_actor(obj, testing::zeros(4), s.actor).theta);
}

TEST(BatchLearn, Deterministic) {
  Rng rng(3);
  const Dataset d = testing::random_dataset(30, 3, rng);
  const auto a = batch_learn(d, settings(0.8)), b = batch_learn(d, settings(0.8));
  EXPECT_EQ(a.theta, b.theta);
  EXPECT_EQ(a.w, b.w);
}

TEST(BatchLearn, RejectsTooLittleData) {
  Rng rng(4);
  EXPECT_THROW(batch_learn(testing::random_dataset(1, 3, rng), settings(0.0)), std::invalid_argument);
}

TEST(RunOnline, RandomWarmStartUpdatesFromT0) {
  LearnerConfig lc;
  lc.mode = WarmStartMode::kRandom;
  lc.T0 = 10;
  lc.T = 30;
  Rng rng(5);
  const OnlineResult res = run_online(UserModel{}, nullptr, lc, rng);
  ASSERT_EQ(res.trace.size(), 20u);
  EXPECT_EQ(res.data.size(), 30u);
  EXPECT_NO_THROW(res.data.validate());
  for (std::size_t k = 0; k < res.trace.size(); ++k) {
    EXPECT_EQ(res.trace[k].t, 10 + static_cast<int>(k));
    EXPECT_TRUE(res.trace[k].theta.allFinite());
  }
}

TEST(RunOnline, RandomPhaseIsACoinFlip) {
  LearnerConfig lc;
  lc.mode = WarmStartMode::kRandom;
  lc.T0 = 10;
  lc.T = 10;
  int ones = 0, n = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    const OnlineResult res = run_online(UserModel{}, nullptr, lc, rng);
    EXPECT_TRUE(res.trace.empty());
    for (const auto& t : res.data.tuples) {
      ones += t.a;
      ++n;
    }
  }
  EXPECT_NEAR(static_cast<double>(ones) / n, 0.5, 4.0 * std::sqrt(0.25 / n));
}

TEST(RunOnline, PriorWarmStartUpdatesAfterEveryTuple) {
  const PriorStudy prior = small_prior(0.4, 6);
  LearnerConfig lc;
  lc.mode = WarmStartMode::kPrior;
  lc.ac = settings(0.4);
  lc.T = 30;
  Rng rng(7);
  const OnlineResult res = run_online(UserModel{}, &prior, lc, rng);
  ASSERT_EQ(res.trace.size(), 30u);
  for (std::size_t k = 0; k < res.trace.size(); ++k) EXPECT_EQ(res.trace[k].t, static_cast<int>(k) + 1);
  EXPECT_EQ(res.theta, res.trace.back().theta);
}

TEST(RunOnline, SinglePriorWarmStartUpdate) {
  const PriorStudy prior = small_prior(0.0, 8);
  LearnerConfig lc;
  lc.mode = WarmStartMode::kPrior;
  lc.T = 1;
  Rng rng(9);
  const OnlineResult res = run_online(UserModel{}, &prior, lc, rng);
  ASSERT_EQ(res.trace.size(), 1u);
  EXPECT_EQ(res.trace[0].t, 1);
  EXPECT_EQ(res.data.size(), 1u);
}

TEST(RunOnline, FirstUpdateIsTheWarmAlternationOnTheFirstTuple) {
  UserModel m;
  m.sigma_s = 0.0;
  m.sigma_r = 0.0;
  const Eigen::Vector4d theta_bar(30.0, 0.0, 0.0, 0.0);  // treats with probability 1 - 1e-13

  // Replay the first decision to learn which tuple the new user produces.
  Rng replay(10);
  Episode ep(m, replay);
  ASSERT_EQ(sample_action(theta_bar, ep.state(), replay), 1);
  const Tuple tau = ep.act(1);

  PriorStudy prior;
  Rng prior_rng(11);
  prior.data = testing::random_dataset(30, 3, prior_rng, 1e3);
  prior.data.kind = DatasetKind::kPrior;
  prior.theta_bar = theta_bar;

  LearnerConfig lc;
  lc.mode = WarmStartMode::kPrior;
  lc.T = 1;
  lc.ac = settings(0.3);
  Rng rng(10);
  const OnlineResult res = run_online(m, &prior, lc, rng);
  ASSERT_EQ(res.data.size(), 1u);
  EXPECT_EQ(res.data[0].s, tau.s);
  EXPECT_EQ(res.data[0].r, tau.r);

  PriorBlock block(prior.data);
  Dataset one;
  one.tuples = {tau};
  const auto expected = alternate(FeatureBatch<double>::from(one), &block, theta_bar, lc.ac);
  EXPECT_EQ(res.trace[0].theta, expected.theta);
  EXPECT_EQ(res.trace[0].w, expected.w);
}

TEST(Alternate, CopiedPriorMatchesPlainOnTwoTuples) {
  Rng rng(12);
  for (int k = 0; k < 3; ++k) {
    const Dataset one = testing::random_dataset(1, 3, rng);
    PriorBlock block(testing::copies(one[0], 400));
    const auto two = FeatureBatch<double>::from(testing::copies(one[0], 2, DatasetKind::kOnline));
    ActorCriticSettings s = settings(0.3 * k);
    s.actor.zeta_a = 1.0;
    s.actor.grad_tol = 1e-12;
    s.actor.max_iters = 5000;
    s.alt_tol = 1e-12;
    s.alt_max_iters = 200;
    const Eigen::VectorXd theta0 = testing::random_vector(4, rng);
    const auto warm = alternate(FeatureBatch<double>::from(one), &block, theta0, s);
    const auto plain = alternate(two, nullptr, theta0, s);
    EXPECT_TRUE(warm.converged && plain.converged);
    EXPECT_LT(max_abs_diff(warm.theta, plain.theta), 1e-9);
    EXPECT_LT(max_abs_diff(warm.w, plain.w), 1e-9 * std::max(1.0, plain.w.lpNorm<Eigen::Infinity>()));
  }
}

TEST(RunOnline, Deterministic) {
  const PriorStudy prior = small_prior(0.2, 11);
  LearnerConfig lc;
  lc.mode = WarmStartMode::kPrior;
  lc.ac = settings(0.2);
  lc.T = 8;
  Rng a(12), b(12);
  const OnlineResult ra = run_online(UserModel{}, &prior, lc, a);
  const OnlineResult rb = run_online(UserModel{}, &prior, lc, b);
  ASSERT_EQ(ra.trace.size(), rb.trace.size());
  for (std::size_t k = 0; k < ra.trace.size(); ++k) {
    EXPECT_EQ(ra.trace[k].theta, rb.trace[k].theta);
    EXPECT_EQ(ra.trace[k].w, rb.trace[k].w);
  }
}

TEST(RunOnline, EachActorStepNeverLowersTheWarmObjective) {
  const PriorStudy prior = small_prior(0.6, 13);
  PriorBlock block(prior.data);
  Rng rng(14);
  const Dataset d = rollout(UserModel{}, random_policy(0.5), 6, rng);
  const auto batch = FeatureBatch<double>::from(d);
  const ActorCriticSettings s = settings(0.6);
  Eigen::VectorXd theta = prior.theta_bar;
  for (int k = 0; k < 10; ++k) {
    const Eigen::VectorXd w = lstdq_warm(block.moments(theta, s.gamma), batch, theta, s.gamma, s.zeta_c);
    const auto obj = ActorObjective<double>::warm(block.batch(), batch, w, s.actor.zeta_a);
    const auto step = maximize_actor(obj, theta, s.actor);
    EXPECT_GE(step.value, obj.value(theta));
    theta = step.theta;
  }
}

TEST(RunOnline, PriorModeNeedsAPrior) {
  LearnerConfig lc;
  lc.mode = WarmStartMode::kPrior;
  Rng rng(15);
  EXPECT_THROW(run_online(UserModel{}, nullptr, lc, rng), std::invalid_argument);
}

TEST(LearnerConfig, Validation) {
  LearnerConfig lc;
  lc.ac.gamma = 1.0;
  EXPECT_THROW(lc.validate(), std::invalid_argument);
  lc = {};
  lc.T0 = 31;
  EXPECT_THROW(lc.validate(), std::invalid_argument);
  EXPECT_EQ(parse_mode("rws"), WarmStartMode::kRandom);
  EXPECT_EQ(parse_mode("nws"), WarmStartMode::kPrior);
  EXPECT_THROW(parse_mode("xyz"), std::invalid_argument);
}

TEST(PriorBlock, CachedMomentsMatchDirectComputation) {
  Rng rng(16);
  const Dataset d = testing::random_dataset(25, 3, rng);
  PriorBlock block(d);
  const auto batch = FeatureBatch<double>::from(d);
  for (int k = 0; k < 3; ++k) {
    const Eigen::VectorXd theta = testing::random_vector(4, rng);
    for (double gamma : {0.0, 0.9}) {
      const auto direct = critic_moments(batch, theta, gamma);
      EXPECT_EQ(block.moments(theta, gamma).a, direct.a);
      EXPECT_EQ(block.moments(theta, gamma).b, direct.b);
    }
  }
}

}  // namespace
}  // namespace warmstart
