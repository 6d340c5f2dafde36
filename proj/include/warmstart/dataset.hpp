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

#ifndef WARMSTART_DATASET_HPP_
#define WARMSTART_DATASET_HPP_

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "warmstart/common.hpp"

namespace warmstart {

using State = Eigen::VectorXd;

// One transition (s, a, r, s') tagged with the user and decision index it came
// from.
struct Tuple {
  State s;
  Action a = 0;
  double r = 0.0;
  State s_next;
  int user_id = 0;
  int t = 0;
};

enum class DatasetKind { kPrior, kOnline };

struct Dataset {
  std::vector<Tuple> tuples;
  DatasetKind kind = DatasetKind::kOnline;

  std::size_t size() const { return tuples.size(); }
  bool empty() const { return tuples.empty(); }
  const Tuple& operator[](std::size_t i) const { return tuples[i]; }

  // State dimension, or 0 for an empty dataset.
  int state_dim() const { return empty() ? 0 : static_cast<int>(tuples.front().s.size()); }

  // Throws std::invalid_argument when a tuple is malformed (bad action,
  // mismatched state lengths, non-finite values) or when consecutive tuples of
  // one user break time ordering or s_next -> s chaining.
  void validate() const;
};

}  // namespace warmstart

#endif  // WARMSTART_DATASET_HPP_
