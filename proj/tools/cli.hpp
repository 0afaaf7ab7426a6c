// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bct::cli {

/// Runs the bct command line. args excludes the program name. Results go to
/// out, diagnostics to err. Exit codes: 0 verified or success, 1
/// counterexample, 2 usage or parse error, 3 inconclusive.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bct::cli
