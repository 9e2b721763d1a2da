#ifndef QOG_TESTS_SUBPROCESS_HPP
#define QOG_TESTS_SUBPROCESS_HPP

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace qog_tests {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

// Runs a shell command, captures stdout; stderr is dropped.
inline RunResult run_command(const std::string& cmd) {
  const std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace qog_tests

#endif  // QOG_TESTS_SUBPROCESS_HPP
