/*
 * Copyright 2026 The noisegauge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NOISEGAUGE_TOOLS_CLI_H_
#define NOISEGAUGE_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace noisegauge::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;   // usage or configuration error
inline constexpr int kExitIo = 2;      // I/O or parse failure
inline constexpr int kExitBudget = 3;  // tune: threshold never met

// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "NOISEGAUGE_OUT_DIR";

// Runs one invocation. `args` excludes the program name, e.g.
// {"evaluate", "--in", "iris.csv"}.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace noisegauge::cli

#endif  // NOISEGAUGE_TOOLS_CLI_H_
