// Copyright 2026 The twinvest Authors. All Rights Reserved.
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
// ==============================================================================

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twinvest/oracle.hpp"

namespace twinvest::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kModelInvalid = 2,
  kOracleDisagreement = 3,
};

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Same as above, but `verify` certifies the supplied solvers instead of the
/// production ones. Test harnesses use this to check that a broken solver is caught.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const oracle::Solvers& solvers);

}  // namespace twinvest::cli
