#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "treepack/graph.hpp"

namespace treepack::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, input_error = 3 };

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// h1, h2, petersen, kN, kAxB, bN,S,K. Throws UsageError for anything else.
Graph fixture_by_name(const std::string& name);

}  // namespace treepack::cli
