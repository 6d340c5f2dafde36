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

#ifndef WARMSTART_FEATURES_HPP_
#define WARMSTART_FEATURES_HPP_

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

#include "warmstart/common.hpp"
#include "warmstart/rng.hpp"

namespace warmstart {

// Length of the value feature for a p-dimensional state.
inline constexpr Eigen::Index value_feature_dim(Eigen::Index p) { return 2 * p + 2; }

// Length of the policy feature (= number of policy parameters q).
inline constexpr Eigen::Index policy_feature_dim(Eigen::Index p) { return p + 1; }

// x(s, a) = [1, s^T, a, a s^T]^T.
template <typename Derived>
Vector<typename Derived::Scalar> value_feature(const Eigen::MatrixBase<Derived>& s, Action a) {
  using Scalar = typename Derived::Scalar;
  check_action(a);
  const Eigen::Index p = s.size();
  Vector<Scalar> x(value_feature_dim(p));
  x[0] = Scalar(1);
  x.segment(1, p) = s;
  x[p + 1] = Scalar(a);
  x.tail(p) = Scalar(a) * s;
  return x;
}

// phi(s) = [1, s^T]^T.
template <typename Derived>
Vector<typename Derived::Scalar> policy_feature(const Eigen::MatrixBase<Derived>& s) {
  using Scalar = typename Derived::Scalar;
  Vector<Scalar> phi(policy_feature_dim(s.size()));
  phi[0] = Scalar(1);
  phi.tail(s.size()) = s;
  return phi;
}

// Logistic function evaluated without overflow for any finite logit.
template <typename Scalar>
Scalar sigmoid(Scalar z) {
  using std::exp;
  if (z >= Scalar(0)) return Scalar(1) / (Scalar(1) + exp(-z));
  const Scalar e = exp(z);
  return e / (Scalar(1) + e);
}

template <typename DerivedT, typename DerivedS>
typename DerivedT::Scalar policy_logit(const Eigen::MatrixBase<DerivedT>& theta, const Eigen::MatrixBase<DerivedS>& s) {
  using Scalar = typename DerivedT::Scalar;
  if (theta.size() != s.size() + 1) throw std::invalid_argument("policy parameters must have length p + 1");
  return theta[0] + theta.tail(theta.size() - 1).dot(s.template cast<Scalar>());
}

// pi_theta(a | s) = exp(a theta^T phi(s)) / (1 + exp(theta^T phi(s))).
// pi(0|s) is computed as sigmoid(-z) rather than 1 - pi(1|s) so that small
// probabilities keep full relative precision.
template <typename DerivedT, typename DerivedS>
typename DerivedT::Scalar action_prob(const Eigen::MatrixBase<DerivedT>& theta, const Eigen::MatrixBase<DerivedS>& s,
                                      Action a) {
  check_action(a);
  const auto z = policy_logit(theta, s);
  return a == 1 ? sigmoid(z) : sigmoid(-z);
}

template <typename DerivedT, typename DerivedS>
Action sample_action(const Eigen::MatrixBase<DerivedT>& theta, const Eigen::MatrixBase<DerivedS>& s, Rng& rng) {
  const double p1 = static_cast<double>(action_prob(theta, s, 1));
  return rng.uniform() < p1 ? Action{1} : Action{0};
}

// y = sum_a x(s', a) pi_theta(a | s').
template <typename DerivedT, typename DerivedS>
Vector<typename DerivedT::Scalar> avg_next_feature(const Eigen::MatrixBase<DerivedT>& theta,
                                                   const Eigen::MatrixBase<DerivedS>& s_next) {
  using Scalar = typename DerivedT::Scalar;
  const Vector<Scalar> s = s_next.template cast<Scalar>();
  const Scalar z = policy_logit(theta, s);
  return value_feature(s, 0) * sigmoid(-z) + value_feature(s, 1) * sigmoid(z);
}

}  // namespace warmstart

#endif  // WARMSTART_FEATURES_HPP_
