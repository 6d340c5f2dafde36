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

#include "warmstart/dataset.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace warmstart {

void Dataset::validate() const {
  std::map<int, std::size_t> last_of_user;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const Tuple& tup = tuples[i];
    const std::string where = "tuple " + std::to_string(i) + ": ";
    if (tup.a != 0 && tup.a != 1) throw std::invalid_argument(where + "action must be 0 or 1");
    if (tup.s.size() == 0 || tup.s.size() != tup.s_next.size()) {
      throw std::invalid_argument(where + "s and s_next must have equal, nonzero length");
    }
    if (tup.s.size() != tuples.front().s.size()) {
      throw std::invalid_argument(where + "state dimension differs from the first tuple");
    }
    if (!tup.s.allFinite() || !tup.s_next.allFinite() || !std::isfinite(tup.r)) {
      throw std::invalid_argument(where + "non-finite value");
    }
    if (tup.t < 0) throw std::invalid_argument(where + "negative time index");

    auto it = last_of_user.find(tup.user_id);
    if (it != last_of_user.end()) {
      const Tuple& prev = tuples[it->second];
      if (tup.t <= prev.t) throw std::invalid_argument(where + "time index not increasing within user");
      if (tup.t == prev.t + 1 && prev.s_next != tup.s) {
        throw std::invalid_argument(where + "s does not chain from previous s_next");
      }
      it->second = i;
    } else {
      last_of_user.emplace(tup.user_id, i);
    }
  }
}

}  // namespace warmstart
