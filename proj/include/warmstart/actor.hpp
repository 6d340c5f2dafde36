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

#ifndef WARMSTART_ACTOR_HPP_
#define WARMSTART_ACTOR_HPP_

#include <cmath>
#include <optional>
#include <stdexcept>

#include <Eigen/Core>

#include "warmstart/common.hpp"
#include "warmstart/dataset.hpp"
#include "warmstart/feature_batch.hpp"

namespace warmstart {

struct ActorConfig {
  double zeta_a = 1e-5;
  int max_iters = 200;
  double grad_tol = 1e-6;
  double step_init = 1.0;
  double armijo_c = 1e-4;
  double backtrack_factor = 0.5;

  void validate() const {
    if (!(zeta_a > 0.0)) throw std::invalid_argument("actor: zeta_a must be positive");
    if (max_iters < 1) throw std::invalid_argument("actor: max_iters must be >= 1");
    if (!(grad_tol > 0.0) || !(step_init > 0.0)) throw std::invalid_argument("actor: grad_tol and step_init must be positive");
    if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw std::invalid_argument("actor: armijo_c must lie in (0, 1)");
    if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0)) {
      throw std::invalid_argument("actor: backtrack_factor must lie in (0, 1)");
    }
  }
};

// Per-state quantities the actor needs from a fixed critic w: the policy
// feature phi(s), Q(s, 0; w) and the advantage of treating Q(s, 1; w) - Q(s, 0; w).
template <typename Scalar>
struct ActorBlock {
  Matrix<Scalar> phi;
  Vector<Scalar> q0;
  Vector<Scalar> dq;

  static ActorBlock from(const FeatureBatch<Scalar>& batch, const Vector<Scalar>& w) {
    if (w.size() != batch.value_dim()) throw std::invalid_argument("actor: critic weights have wrong length");
    ActorBlock blk;
    blk.phi = batch.phi;
    blk.q0.noalias() = batch.x0 * w;
    blk.dq.noalias() = (batch.x1 - batch.x0) * w;
    return blk;
  }

  Eigen::Index size() const { return phi.rows(); }

  // S(theta) = sum_i sum_a Q(s_i, a) pi_theta(a | s_i) and, when `grad` is
  // non-null, its gradient sum_i dq_i pi(1|s_i) pi(0|s_i) phi_i. Logits and
  // exponentials are shared between the two.
  Scalar evaluate(const Vector<Scalar>& theta, Vector<Scalar>* grad) const {
    const auto z = (phi * theta).array().eval();
    const auto e = (-z.abs()).exp().eval();        // exp(-|z|), never overflows
    const auto inv = (Scalar(1) + e).inverse().eval();
    const auto p1 = (z >= Scalar(0)).select(inv, e * inv).eval();
    if (grad != nullptr) *grad = phi.transpose() * (e * inv.square() * dq.array()).matrix();
    return q0.sum() + (p1 * dq.array()).sum();
  }

  Scalar expected_value_sum(const Vector<Scalar>& theta) const { return evaluate(theta, nullptr); }

  Vector<Scalar> expected_value_gradient(const Vector<Scalar>& theta) const {
    Vector<Scalar> g;
    evaluate(theta, &g);
    return g;
  }
};

// The regularised actor objective, plain or with a prior-study block:
//   J(theta) = [prior_scale * S_prior(theta) + S_new(theta)] / normalizer - zeta_a/2 |theta|^2
// with S(theta) = sum_i sum_a Q(s_i, a; w) pi_theta(a | s_i). The plain form has
// no prior block and normalizer t; the warm form has prior_scale 1/NT and
// normalizer t + 1.
template <typename Scalar>
class ActorObjective {
 public:
  static ActorObjective plain(const FeatureBatch<Scalar>& data, const Vector<Scalar>& w, Scalar zeta_a) {
    ActorObjective obj(ActorBlock<Scalar>::from(data, w), zeta_a);
    obj.normalizer_ = Scalar(data.size());
    return obj;
  }

  static ActorObjective warm(const FeatureBatch<Scalar>& prior, const FeatureBatch<Scalar>& data,
                             const Vector<Scalar>& w, Scalar zeta_a, const PriorWeighting& weighting = {}) {
    return warm(ActorBlock<Scalar>::from(prior, w), data, w, zeta_a, weighting);
  }

  static ActorObjective warm(ActorBlock<Scalar> prior, const FeatureBatch<Scalar>& data, const Vector<Scalar>& w,
                             Scalar zeta_a, const PriorWeighting& weighting = {}) {
    ActorObjective obj(ActorBlock<Scalar>::from(data, w), zeta_a);
    obj.normalizer_ = Scalar(data.size() + weighting.extra_samples);
    if (weighting.include_prior) {
      if (prior.size() == 0) throw EmptyDataset("actor: prior dataset is empty");
      obj.prior_scale_ = Scalar(1) / Scalar(prior.size());
      obj.prior_ = std::move(prior);
    }
    return obj;
  }

  Scalar value(const Vector<Scalar>& theta) const {
    Scalar total = online_.expected_value_sum(theta);
    if (prior_) total = prior_scale_ * prior_->expected_value_sum(theta) + total;
    return total / normalizer_ - zeta_a_ / Scalar(2) * theta.squaredNorm();
  }

  Vector<Scalar> gradient(const Vector<Scalar>& theta) const {
    Vector<Scalar> total = online_.expected_value_gradient(theta);
    if (prior_) total = prior_scale_ * prior_->expected_value_gradient(theta) + total;
    return total / normalizer_ - zeta_a_ * theta;
  }

  Scalar value_and_gradient(const Vector<Scalar>& theta, Vector<Scalar>& grad) const {
    Scalar total = online_.evaluate(theta, &grad);
    if (prior_) {
      Vector<Scalar> prior_grad;
      total = prior_scale_ * prior_->evaluate(theta, &prior_grad) + total;
      grad = prior_scale_ * prior_grad + grad;
    }
    grad = grad / normalizer_ - zeta_a_ * theta;
    return total / normalizer_ - zeta_a_ / Scalar(2) * theta.squaredNorm();
  }

  Scalar zeta_a() const { return zeta_a_; }
  Scalar normalizer() const { return normalizer_; }
  bool has_prior() const { return prior_.has_value(); }
  Eigen::Index dim() const { return online_.phi.cols(); }

 private:
  ActorObjective(ActorBlock<Scalar> online, Scalar zeta_a) : online_(std::move(online)), zeta_a_(zeta_a) {
    if (online_.size() == 0) throw EmptyDataset("actor: dataset is empty");
  }

  ActorBlock<Scalar> online_;
  std::optional<ActorBlock<Scalar>> prior_;
  Scalar prior_scale_ = Scalar(0);
  Scalar normalizer_ = Scalar(1);
  Scalar zeta_a_;
};

inline double actor_objective(const Eigen::VectorXd& w, const Eigen::VectorXd& theta, const Dataset& data,
                              double zeta_a) {
  return ActorObjective<double>::plain(FeatureBatch<double>::from(data), w, zeta_a).value(theta);
}

inline double actor_objective_warm(const Eigen::VectorXd& w, const Eigen::VectorXd& theta, const Dataset& prior,
                                   const Dataset& data, double zeta_a, const PriorWeighting& weighting = {}) {
  return ActorObjective<double>::warm(FeatureBatch<double>::from(prior), FeatureBatch<double>::from(data), w, zeta_a,
                                      weighting)
      .value(theta);
}

// Analytic gradient of the plain objective (prior == nullptr) or the warm one.
inline Eigen::VectorXd actor_gradient(const Eigen::VectorXd& w, const Eigen::VectorXd& theta, const Dataset* prior,
                                      const Dataset& data, double zeta_a) {
  const auto batch = FeatureBatch<double>::from(data);
  if (prior == nullptr) return ActorObjective<double>::plain(batch, w, zeta_a).gradient(theta);
  return ActorObjective<double>::warm(FeatureBatch<double>::from(*prior), batch, w, zeta_a).gradient(theta);
}

template <typename Scalar>
struct ActorResult {
  Vector<Scalar> theta;
  Scalar value = Scalar(0);
  int iterations = 0;
  bool converged = false;
};

// Gradient ascent with Armijo backtracking. Each accepted step satisfies
// J(theta + alpha g) >= J(theta) + c alpha |g|^2, so the objective never
// decreases. Stops when |g|_inf < grad_tol, after max_iters steps, or when no
// step length down to machine resolution is accepted.
template <typename Scalar>
ActorResult<Scalar> maximize_actor(const ActorObjective<Scalar>& objective, const Vector<Scalar>& theta_init,
                                   const ActorConfig& config) {
  using std::isfinite;
  config.validate();
  if (theta_init.size() != objective.dim()) throw std::invalid_argument("actor: theta_init has wrong length");

  ActorResult<Scalar> res;
  res.theta = theta_init;
  Vector<Scalar> grad;
  res.value = objective.value_and_gradient(res.theta, grad);
  if (!isfinite(res.value)) throw NonFiniteObjective("actor: objective is not finite at the initial point");

  const Scalar c = Scalar(config.armijo_c);
  const Scalar shrink = Scalar(config.backtrack_factor);
  const Scalar min_step = Eigen::NumTraits<Scalar>::epsilon() * Scalar(1e-4);

  Vector<Scalar> candidate, candidate_grad;
  for (;;) {
    if (!grad.allFinite()) throw NonFiniteObjective("actor: gradient is not finite");
    if (grad.template lpNorm<Eigen::Infinity>() < Scalar(config.grad_tol)) {
      res.converged = true;
      break;
    }
    if (res.iterations >= config.max_iters) break;
    ++res.iterations;

    const Scalar slope = grad.squaredNorm();
    bool accepted = false;
    for (Scalar step = Scalar(config.step_init); step > min_step; step *= shrink) {
      candidate = res.theta + step * grad;
      const Scalar value = objective.value_and_gradient(candidate, candidate_grad);
      if (!isfinite(value)) throw NonFiniteObjective("actor: objective is not finite during line search");
      if (value >= res.value + c * step * slope) {
        res.theta.swap(candidate);
        grad.swap(candidate_grad);
        res.value = value;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  return res;
}

}  // namespace warmstart

#endif  // WARMSTART_ACTOR_HPP_
