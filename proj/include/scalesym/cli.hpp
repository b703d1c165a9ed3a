// Copyright 2026 The scalesym Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace scalesym {

/// Exit-code contract: 0 ok, 1 claim failed, 2 usage error, 3 I/O error.
struct RunResult {
    int exit_code = 0;
    std::string out;  ///< report payload (stdout unless --output redirects it)
    std::string err;  ///< diagnostics (stderr)
};

/// Runs one CLI invocation; `args` excludes the program name. Identical
/// arguments (and seed, where applicable) produce byte-identical output.
RunResult run_command(const std::vector<std::string>& args);

}  // namespace scalesym
