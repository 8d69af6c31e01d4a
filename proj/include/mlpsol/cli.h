// Copyright 2026 The mlpsol Authors
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

#ifndef MLPSOL_CLI_H_
#define MLPSOL_CLI_H_

#include <ostream>

namespace mlpsol {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation error or parity failure
inline constexpr int kExitIo = 2;

// Entry point of the `mlpsol` command line: transpile, gas, infer, compare,
// fixture. Writes reports to `out` and diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mlpsol

#endif  // MLPSOL_CLI_H_
