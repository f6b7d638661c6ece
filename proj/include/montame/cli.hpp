#pragma once

namespace montame {

/// Runs the command-line interface. Exit codes: 0 on successful analysis
/// (regardless of verdict), 1 on input errors, 2 on internal assertion
/// failures.
int run_cli(int argc, const char* const* argv);

}  // namespace montame
