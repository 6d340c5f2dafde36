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

#ifndef WARMSTART_CRITIC_HPP_
#define WARMSTART_CRITIC_HPP_

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include <Eigen/Core>
#include <Eigen/LU>

#include "warmstart/common.hpp"
#include "warmstart/dataset.hpp"
#include "warmstart/feature_batch.hpp"

namespace warmstart {

inline constexpr double kCriticRcondThreshold = 1e-14;

// Sample means of the LSTDQ terms over a set of samples:
//   a = (1/n) sum_i x_i (x_i - gamma y_i)^T,  b = (1/n) sum_i x_i r_i.
// Double inputs are accumulated in long double, so n copies of one sample
// reproduce that sample's terms exactly.
template <typename Scalar>
struct CriticMoments {
  Matrix<Scalar> a;
  Vector<Scalar> b;
  Eigen::Index count = 0;
};

// Moments from explicit feature rows. Rows of `x` are current features, rows
// of `y` the policy-averaged next features.
template <typename DerivedX, typename DerivedY, typename DerivedR>
CriticMoments<typename DerivedX::Scalar> lstdq_moments(const Eigen::MatrixBase<DerivedX>& x,
                                                       const Eigen::MatrixBase<DerivedY>& y,
                                                       const Eigen::MatrixBase<DerivedR>& r,
                                                       typename DerivedX::Scalar gamma) {
  using Scalar = typename DerivedX::Scalar;
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != r.size()) {
    throw std::invalid_argument("lstdq_moments: shape mismatch");
  }
  if (!(gamma >= Scalar(0) && gamma < Scalar(1))) throw std::invalid_argument("lstdq: gamma must lie in [0, 1)");
  using Accum = std::conditional_t<std::is_same_v<Scalar, double>, long double, Scalar>;
  CriticMoments<Scalar> m;
  m.count = x.rows();
  if (m.count == 0) {
    m.a = Matrix<Scalar>::Zero(x.cols(), x.cols());
    m.b = Vector<Scalar>::Zero(x.cols());
    return m;
  }
  const Matrix<Scalar> td = x - gamma * y;
  const Matrix<Accum> xt = x.transpose().template cast<Accum>();
  const Accum n = Accum(m.count);
  m.a = ((xt * td.template cast<Accum>()) / n).template cast<Scalar>();
  m.b = ((xt * r.template cast<Accum>()) / n).template cast<Scalar>();
  return m;
}

template <typename Scalar>
CriticMoments<Scalar> critic_moments(const FeatureBatch<Scalar>& batch, const Vector<Scalar>& theta, Scalar gamma) {
  return lstdq_moments(batch.x, batch.next_features(theta), batch.r, gamma);
}

// Normalised system a w = b before the ridge term is added.
template <typename Scalar>
struct CriticSystem {
  Matrix<Scalar> a;
  Vector<Scalar> b;
};

// The warm-start system split into its prior and new-user blocks, each
// already divided by the common normaliser (t + extra_samples).
template <typename Scalar>
struct WarmCriticSystem {
  Matrix<Scalar> prior_a, online_a;
  Vector<Scalar> prior_b, online_b;
  Scalar normalizer = Scalar(1);
  bool has_prior = false;

  CriticSystem<Scalar> combined() const {
    if (!has_prior) return {online_a, online_b};
    return {prior_a + online_a, prior_b + online_b};
  }
};

template <typename Scalar>
CriticSystem<Scalar> plain_critic_system(const CriticMoments<Scalar>& online) {
  if (online.count == 0) throw EmptyDataset("lstdq: dataset is empty");
  return {online.a, online.b};
}

template <typename Scalar>
WarmCriticSystem<Scalar> warm_critic_system(const CriticMoments<Scalar>& prior, const CriticMoments<Scalar>& online,
                                            const PriorWeighting& weighting = {}) {
  if (online.count == 0) throw EmptyDataset("lstdq_warm: new-user dataset is empty");
  WarmCriticSystem<Scalar> sys;
  sys.normalizer = Scalar(online.count + weighting.extra_samples);
  const Scalar online_share = Scalar(online.count) / sys.normalizer;
  sys.online_a = online.a * online_share;
  sys.online_b = online.b * online_share;
  if (weighting.include_prior) {
    if (prior.count == 0) throw EmptyDataset("lstdq_warm: prior dataset is empty");
    sys.prior_a = prior.a / sys.normalizer;
    sys.prior_b = prior.b / sys.normalizer;
    sys.has_prior = true;
  }
  return sys;
}

// Solves (zeta_c I + a) w = b with partial-pivot LU and one refinement step.
// Throws SingularSystem when the reciprocal condition estimate falls below
// kCriticRcondThreshold or the residual check fails.
template <typename Scalar>
Vector<Scalar> solve_critic(const CriticSystem<Scalar>& sys, Scalar zeta_c) {
  using std::isfinite;
  if (!(zeta_c > Scalar(0))) throw std::invalid_argument("lstdq: zeta_c must be positive");
  const Eigen::Index d = sys.a.rows();
  const Matrix<Scalar> lhs = zeta_c * Matrix<Scalar>::Identity(d, d) + sys.a;
  if (!lhs.allFinite() || !sys.b.allFinite()) throw SingularSystem("lstdq: non-finite system");

  const Eigen::PartialPivLU<Matrix<Scalar>> lu(lhs);
  const Scalar rcond = lu.rcond();
  if (!isfinite(rcond) || rcond < Scalar(kCriticRcondThreshold)) {
    std::ostringstream msg;
    msg << "lstdq: system is numerically singular (rcond " << static_cast<double>(rcond) << ")";
    throw SingularSystem(msg.str());
  }
  Vector<Scalar> w = lu.solve(sys.b);
  w += lu.solve(sys.b - lhs * w);

  const Scalar residual = (lhs * w - sys.b).template lpNorm<Eigen::Infinity>();
  const Scalar scale = Scalar(1) + sys.b.template lpNorm<Eigen::Infinity>();
  if (!w.allFinite() || residual > Scalar(1e-10) * scale) {
    std::ostringstream msg;
    msg << "lstdq: residual " << static_cast<double>(residual) << " exceeds tolerance";
    throw SingularSystem(msg.str());
  }
  return w;
}

template <typename Scalar>
Vector<Scalar> lstdq(const FeatureBatch<Scalar>& data, const Vector<Scalar>& theta, Scalar gamma, Scalar zeta_c) {
  return solve_critic(plain_critic_system(critic_moments(data, theta, gamma)), zeta_c);
}

inline Eigen::VectorXd lstdq(const Dataset& data, const Eigen::VectorXd& theta, double gamma, double zeta_c) {
  if (data.empty()) throw EmptyDataset("lstdq: dataset is empty");
  return lstdq(FeatureBatch<double>::from(data), theta, gamma, zeta_c);
}

template <typename Scalar>
Vector<Scalar> lstdq_warm(const CriticMoments<Scalar>& prior, const FeatureBatch<Scalar>& data,
                          const Vector<Scalar>& theta, Scalar gamma, Scalar zeta_c,
                          const PriorWeighting& weighting = {}) {
  return solve_critic(warm_critic_system(prior, critic_moments(data, theta, gamma), weighting).combined(), zeta_c);
}

template <typename Scalar>
Vector<Scalar> lstdq_warm(const FeatureBatch<Scalar>& prior, const FeatureBatch<Scalar>& data,
                          const Vector<Scalar>& theta, Scalar gamma, Scalar zeta_c,
                          const PriorWeighting& weighting = {}) {
  return lstdq_warm(critic_moments(prior, theta, gamma), data, theta, gamma, zeta_c, weighting);
}

inline Eigen::VectorXd lstdq_warm(const Dataset& prior, const Dataset& data, const Eigen::VectorXd& theta,
                                  double gamma, double zeta_c, const PriorWeighting& weighting = {}) {
  if (prior.empty()) throw EmptyDataset("lstdq_warm: prior dataset is empty");
  if (data.empty()) throw EmptyDataset("lstdq_warm: new-user dataset is empty");
  return lstdq_warm(FeatureBatch<double>::from(prior), FeatureBatch<double>::from(data), theta, gamma, zeta_c,
                    weighting);
}

}  // namespace warmstart

#endif  // WARMSTART_CRITIC_HPP_
