#pragma once

#include <iosfwd>

namespace jacarena {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitProverWins = 0,  // also: transcript valid, sweep fully refuted
  kExitDelayerWins = 1, // also: transcript invalid, some game not refuted
  kExitConfigError = 2,
  kExitEngineError = 3,
};

// The jacarena command line: play, repl, refute, alpha, verify.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jacarena
