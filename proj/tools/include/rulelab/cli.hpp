/*
   Copyright 2026 The rulelab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rulelab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Environment variable naming the default `experiment --output-dir`.
inline constexpr const char* kOutputDirEnv = "RULELAB_OUTPUT_DIR";

/// Runs one invocation. `args` excludes the program name. Results go to `out`
/// or to files, diagnostics to `err`. Returns 0, 1 (usage) or 2 (data).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rulelab::cli
