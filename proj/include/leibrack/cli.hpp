#pragma once

// Command-line driver. Exit codes are a total function of the outcome:
// 0 success, 1 a verified law failed (Leibniz identity / rack axioms),
// 2 malformed input, 3 precondition violation, 4 internal invariant breach.

namespace leibrack {

int run_cli(int argc, const char* const* argv);

}  // namespace leibrack
