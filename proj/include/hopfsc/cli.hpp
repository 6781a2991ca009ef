#pragma once

#include <iosfwd>

// Command-line driver behind the hopfsc binary. Split out so tests can invoke
// subcommands in-process and assert on exit codes and captured output.
//
// Exit codes: 0 when the requested computation succeeds (and, for checking
// subcommands, the checks pass), 1 when a mathematical check fails on
// well-formed input, 2 for unusable input or bad usage.

namespace hopfsc::cli {

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv);

}  // namespace hopfsc::cli
