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

#ifndef WARMSTART_TOOLS_CLI_HPP_
#define WARMSTART_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace warmstart::cli {

inline constexpr const char* kToolName = "warmstart";
inline constexpr const char* kToolVersion = "1.0.0";

// Runs one command line. Returns the process exit code; failures print a single
// "error: <kind>: <message>" line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace warmstart::cli

#endif  // WARMSTART_TOOLS_CLI_HPP_
