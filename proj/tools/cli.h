// Copyright 2026 The QCW Authors
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

#ifndef QCW_TOOLS_CLI_H
#define QCW_TOOLS_CLI_H

#include <iosfwd>

namespace qcw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitFile = 3;

/// Parses the command line, runs the subcommand and writes reports to `out`, diagnostics to
/// `err`. Returns the process exit status.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qcw::cli

#endif
