// Copyright 2026 The erwmoments Authors
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

// The erw command line: exact, deviations, rates, simulate, bounds,
// first-return, and replay of a run manifest.
//
// Exit codes: 0 success, 2 invalid input, 3 resource cap, 1 anything else.
// When --output is given, <output>.manifest.json records the arguments that
// produced it; `erw replay --manifest <file>` reruns them.

#ifndef ERW_TOOLS_CLI_H_
#define ERW_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace erw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;

// Tabular output goes to `out` unless --output names a file; diagnostics and
// warnings go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "1000", "10^3", "1e3" -> 1000. Throws DomainError otherwise.
std::int64_t parse_count(std::string_view text);

}  // namespace erw::cli

#endif  // ERW_TOOLS_CLI_H_
