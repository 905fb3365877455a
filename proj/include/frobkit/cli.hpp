#pragma once

#include <string>
#include <vector>

namespace frobkit {

/// Outcome of one CLI invocation: the process exit code plus the exact bytes
/// for the output and error streams.
///
/// Exit codes: 0 ok; 1 usage error (bad flags, unknown command or binding);
/// 2 parse error (session file or polynomial text); 3 precondition failure;
/// 4 iteration/exponent cap exceeded.
struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command. `args` excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

/// main()-style wrapper: runs the command and writes the streams.
int cli_main(int argc, char** argv);

}  // namespace frobkit
