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

#ifndef WARMSTART_COMMON_HPP_
#define WARMSTART_COMMON_HPP_

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace warmstart {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Binary treatment decision: 0 = no intervention, 1 = intervention.
using Action = int;

inline constexpr int kNumActions = 2;

inline void check_action(Action a) {
  if (a != 0 && a != 1) {
    throw std::invalid_argument("action must be 0 or 1, got " + std::to_string(a));
  }
}

// How the prior-study block enters the warm-start critic and actor. The
// defaults give the warm-start estimator: the prior block carries total weight
// one sample and the normalisation is 1 / (t + 1). Setting include_prior to
// false and extra_samples to 0 recovers the plain estimator exactly.
struct PriorWeighting {
  bool include_prior = true;
  int extra_samples = 1;
};

// Raised when the critic's linear system has a reciprocal condition estimate
// below the singularity threshold, or its solution fails the residual check.
class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyDataset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonFiniteObjective : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace warmstart

#endif  // WARMSTART_COMMON_HPP_
