// Minimal popen wrapper for driving the CLI binary from tests.
#ifndef RECRING_TESTS_SUBPROCESS_HPP
#define RECRING_TESTS_SUBPROCESS_HPP

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct RunResult {
    std::string output; // captured stdout
    int exit_code = -1;
};

inline std::string& cli_path_override() {
    static std::string path;
    return path;
}

inline std::string cli_path() {
    if (!cli_path_override().empty())
        return cli_path_override();
#ifdef RECRING_CLI_PATH
    return RECRING_CLI_PATH;
#else
    throw std::runtime_error("RECRING_CLI_PATH not configured");
#endif
}

/// Runs `cli_path() + " " + args` through the shell, stderr discarded.
inline RunResult run_cli(const std::string& args) {
    std::string command = "'" + cli_path() + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + command);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace testutil

#endif
