// Copyright 2026 The aoa-pl Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AOA_COMMANDS_HPP_
#define AOA_COMMANDS_HPP_

#include <ostream>

namespace aoa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;
inline constexpr int kExitSelfTest = 4;

// Default output directory when neither --out nor output_dir is given.
inline constexpr const char* kOutDirEnv = "AOA_OUT_DIR";

// Entry point of the `aoa` tool: subcommands run, sweep, oracle-check.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace aoa

#endif  // AOA_COMMANDS_HPP_
