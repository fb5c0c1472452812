// Copyright 2026 The MSPEC Authors
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

#ifndef MSPEC_CLI_HPP_
#define MSPEC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

// Entry point of the `mspec` tool. `args` excludes the program name. The
// JSON report goes to `out`; diagnostics go to `err`.
//
//   solve       --input F --eps E [--fast] [--costs F] [--exact integer|uniform]
//   bottleneck  --input F
//   exact       --input F [--mode integer|uniform]
//   domain      --input F --domains F
//   discrete    --input F
//   barrier     --input F --eps E [--svg OUT] [--fast]
//   verify      --input F --powers F
//   oracle      --input F [--cap N]
//
// Common flags: --pretty, --copy-cap N.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mspec::cli

#endif  // MSPEC_CLI_HPP_
