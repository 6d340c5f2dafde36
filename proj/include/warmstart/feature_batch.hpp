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

#ifndef WARMSTART_FEATURE_BATCH_HPP_
#define WARMSTART_FEATURE_BATCH_HPP_

#include <Eigen/Core>

#include "warmstart/common.hpp"
#include "warmstart/dataset.hpp"
#include "warmstart/features.hpp"

namespace warmstart {

// A dataset's features stacked row-wise, so critic and actor sums become
// dense matrix products. Rows follow dataset order.
template <typename Scalar>
struct FeatureBatch {
  Matrix<Scalar> x;          // x(s_i, a_i)
  Matrix<Scalar> x0, x1;     // x(s_i, 0), x(s_i, 1)
  Matrix<Scalar> next0, next1;  // x(s'_i, 0), x(s'_i, 1)
  Matrix<Scalar> phi;        // phi(s_i)
  Matrix<Scalar> next_phi;   // phi(s'_i)
  Vector<Scalar> r;

  Eigen::Index size() const { return x.rows(); }
  Eigen::Index value_dim() const { return x.cols(); }
  Eigen::Index policy_dim() const { return phi.cols(); }

  static FeatureBatch from(const Dataset& data) {
    if (data.empty()) throw EmptyDataset("feature batch: dataset is empty");
    const Eigen::Index n = static_cast<Eigen::Index>(data.size());
    const Eigen::Index p = data.state_dim();
    const Eigen::Index d = value_feature_dim(p);
    const Eigen::Index q = policy_feature_dim(p);

    FeatureBatch b;
    b.x.resize(n, d);
    b.x0.resize(n, d);
    b.x1.resize(n, d);
    b.next0.resize(n, d);
    b.next1.resize(n, d);
    b.phi.resize(n, q);
    b.next_phi.resize(n, q);
    b.r.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Tuple& tup = data[static_cast<std::size_t>(i)];
      if (tup.s.size() != p || tup.s_next.size() != p) {
        throw std::invalid_argument("feature batch: inconsistent state dimension");
      }
      check_action(tup.a);
      const Vector<Scalar> s = tup.s.template cast<Scalar>();
      const Vector<Scalar> sn = tup.s_next.template cast<Scalar>();
      b.x0.row(i) = value_feature(s, 0).transpose();
      b.x1.row(i) = value_feature(s, 1).transpose();
      b.x.row(i) = tup.a == 1 ? b.x1.row(i) : b.x0.row(i);
      b.next0.row(i) = value_feature(sn, 0).transpose();
      b.next1.row(i) = value_feature(sn, 1).transpose();
      b.phi.row(i) = policy_feature(s).transpose();
      b.next_phi.row(i) = policy_feature(sn).transpose();
      b.r[i] = Scalar(tup.r);
    }
    return b;
  }

  // pi_theta(1 | s'_i) for every row.
  Vector<Scalar> next_treat_prob(const Vector<Scalar>& theta) const {
    check_theta(theta);
    const Vector<Scalar> z = next_phi * theta;
    return z.unaryExpr([](Scalar v) { return sigmoid(v); });
  }

  // Rows y_i = sum_a x(s'_i, a) pi_theta(a | s'_i).
  Matrix<Scalar> next_features(const Vector<Scalar>& theta) const {
    check_theta(theta);
    const Vector<Scalar> z = next_phi * theta;
    const Vector<Scalar> p1 = z.unaryExpr([](Scalar v) { return sigmoid(v); });
    const Vector<Scalar> p0 = z.unaryExpr([](Scalar v) { return sigmoid(-v); });
    return p0.asDiagonal() * next0 + p1.asDiagonal() * next1;
  }

 private:
  void check_theta(const Vector<Scalar>& theta) const {
    if (theta.size() != policy_dim()) throw std::invalid_argument("policy parameters must have length p + 1");
  }
};

}  // namespace warmstart

#endif  // WARMSTART_FEATURE_BATCH_HPP_
