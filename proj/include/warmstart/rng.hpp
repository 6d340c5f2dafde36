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

#ifndef WARMSTART_RNG_HPP_
#define WARMSTART_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace warmstart {

// Seedable random stream. Every stochastic routine in the library takes one of
// these explicitly so results depend only on seeds, never on scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Stream keyed by a master seed plus an ordered list of integer keys (e.g.
  // gamma, arm, user). Keys are split into 32-bit words and mixed through
  // std::seed_seq, so distinct key tuples give decorrelated streams.
  static Rng derive(std::uint64_t master, std::initializer_list<std::uint64_t> keys);

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace warmstart

#endif  // WARMSTART_RNG_HPP_
