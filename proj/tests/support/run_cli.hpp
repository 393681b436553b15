#pragma once

// Spawns the CLI binary (path injected via NLAG_CLI_PATH) and captures its
// combined output and exit code.

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace nlag::testsupport {

struct RunResult {
    int exit_code;
    std::string output;
};

inline RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NLAG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace nlag::testsupport
