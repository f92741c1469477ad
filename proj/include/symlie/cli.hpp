#pragma once

// Command-line front end.  Exit codes: 0 every requested verification passed,
// 1 a verification failed, 2 bad usage or malformed input.

#include <iosfwd>
#include <string>
#include <vector>

namespace symlie::cli {

constexpr int exit_pass = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace symlie::cli
