// Copyright 2026 The Bentkit Authors.
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

#ifndef BENTKIT_CLI_H_
#define BENTKIT_CLI_H_

// The `bentkit` command line: reproduce, check, walsh, fit-dual, construct,
// verify-theorem and search. Exit codes: 0 when every requested
// verification passes, 1 on a mismatch, 2 on a usage or input error.

#include <ostream>
#include <string>
#include <vector>

namespace bentkit {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bentkit

#endif  // BENTKIT_CLI_H_
