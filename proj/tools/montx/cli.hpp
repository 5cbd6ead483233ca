// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MONTX_TOOLS_CLI_HPP
#define MONTX_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace montx::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kNotFound = 3,
};

/// Runs the montx command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace montx::cli

#endif  // MONTX_TOOLS_CLI_HPP
