// Copyright 2026 The qonash Authors
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

namespace qonash::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,    // bad flags or unreadable input
  kInvalid = 2,  // schema or domain error
  kOracleMismatch = 3,
};

/// `qonash analyze <file|-> [--format text|json] [--oracle-check]
///  [--max-dim N] [--max-index N]`. `args` excludes the program name.
/// Reports go to `out`, diagnostics and errors to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace qonash::cli
