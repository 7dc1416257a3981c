#ifndef STCUT_TOOLS_CLI_H_
#define STCUT_TOOLS_CLI_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace stcut::cli {

enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitInfeasible = 3,
  kExitMismatch = 4,
};

struct RunReport {
  std::string command;
  int exit_code = kExitOk;
  std::string out;  // stdout payload
  std::string err;  // stderr message
  double elapsed_ms = 0;
  std::map<std::string, std::int64_t> counters;
};

// args excludes the program name.
RunReport run_command(const std::vector<std::string>& args);

int main_entry(int argc, char** argv);

}  // namespace stcut::cli

#endif  // STCUT_TOOLS_CLI_H_
