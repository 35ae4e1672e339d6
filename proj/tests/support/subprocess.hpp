#pragma once

#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace testsupport {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // captured standard output, byte for byte
};

// Runs a shell command, capturing stdout. Stderr passes through to the test
// runner's stderr so diagnostics stay visible.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = ::pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

inline std::string quoted(const std::string& path) {
  return "\"" + path + "\"";
}

}  // namespace testsupport
