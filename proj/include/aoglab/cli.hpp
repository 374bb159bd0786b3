// Copyright 2026 The aoglab Authors
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

#ifndef AOGLAB_CLI_HPP_
#define AOGLAB_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace aoglab::cli {

enum ExitCode : int {
  kOk = 0,
  kRejected = 1,      // verification failed or construction refused
  kInvalid = 2,       // bad parameters or malformed input
  kSizeGuard = 3,
};

// Runs one command. `args` excludes the program name. Documents go to `out`
// (or to --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace aoglab::cli

#endif  // AOGLAB_CLI_HPP_
