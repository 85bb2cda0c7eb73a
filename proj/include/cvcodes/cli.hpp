// Copyright 2026 The cvcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>

namespace cvcodes {

inline constexpr const char *kToolVersion = "0.1.0";

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitBadInput = 2 };

/// Runs the `cvcodes` command line: build-code, check, bridge and alg1.
/// Reports go to `out`, diagnostics to `err`. Returns the exit status.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace cvcodes
