// Copyright 2026 The phaseest Authors
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

#ifndef PHASEEST_TOOLS_CLI_H
#define PHASEEST_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace phaseest::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitRuntime = 3,
    kExitCapExceeded = 4,
    kExitCheckFailed = 5,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Replaces `--config FILE` with the file's key=value pairs as `--key value`
/// tokens placed right after the subcommand, so explicit flags override them.
/// Throws std::runtime_error if the file cannot be read or a line is malformed.
std::vector<std::string> expand_config(const std::vector<std::string> &args);

}  // namespace phaseest::cli

#endif
