#pragma once

// Runs the built CLI binary and captures stdout + exit code, for the
// end-to-end tests. MBSUMS_BIN is injected by the build.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

struct CliResult {
    int exit_code;
    std::string out;
};

inline CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(MBSUMS_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}
