#pragma once

// Drives the command-line tool as a subprocess. CGT_CLI_PATH is injected by
// the build as the absolute path of the built binary.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
};

// Runs `cgt <args>` through the shell with stderr silenced and captures
// stdout. `env` may carry variable assignments ("NAME=value ").
inline Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + std::string(CGT_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace cli
