// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coboson::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kPass = 0,
  kUsageOrIo = 1,
  kInfeasible = 2,
  kVerificationFailed = 3,
};

/// Runs the command line `coboson <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coboson::cli
