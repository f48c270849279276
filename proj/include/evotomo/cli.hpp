// Copyright 2026 The evotomo Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evotomo {

enum ExitCode : int {
  kExitOk = 0,
  kExitBadInput = 1,
  kExitInsufficientSeed = 2,
  kExitRankDeficient = 3,
  kExitAmbiguous = 4,
};

/// Outputs without an explicit -o go to this directory when it is set,
/// otherwise to `out`.
inline constexpr const char* kOutputDirEnv = "EVOTOMO_OUTPUT_DIR";

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace evotomo
