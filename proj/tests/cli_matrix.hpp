#pragma once

// Command matrix shared by the CLI tests and the acceptance binary.
// Each row: arguments after the program name, and the exit code it must produce.

#include <array>
#include <cstdio>
#include <string>
#include <string_view>

#include <sys/wait.h>

namespace cli_matrix {

struct Case {
    std::string_view args;
    int exit_code;
};

inline constexpr std::array kCases{
    Case{"compute 4 2", 0},
    Case{"compute 6 3 --format json", 0},
    Case{"compute 9 4 --format latex", 0},
    Case{"compute 3 5", 0},
    Case{"compute -1 0", 2},
    Case{"enumerate tilings 4 2", 0},
    Case{"enumerate tilings 4 2 --format json", 0},
    Case{"enumerate paths 5 2", 0},
    Case{"enumerate partitions 4 2", 0},
    Case{"enumerate tilings 20 15 --count-only", 2},
    Case{"enumerate tilings 4 5", 2},
    Case{"eval 4 2 --q 2 --check-subspaces", 0},
    Case{"eval 3 1 --q 3 --check-subspaces --format json", 0},
    Case{"eval 6 3 --q -2", 0},
    Case{"eval 4 2 --q x", 2},
    Case{"stratify last-square 5 2", 0},
    Case{"stratify last-domino 5 2 --format json", 0},
    Case{"stratify median-domino 6 1", 0},
    Case{"stratify median-square 3 2 --format latex", 0},
    Case{"stratify median-square 4 1", 2},
    Case{"stratify sideways 4 1", 2},
    Case{"verify cor2-printed", 0},
    Case{"verify thm2 --max 9 --format json", 0},
    Case{"verify all --max 8", 0},
    Case{"verify thm9", 2},
    Case{"", 2},
    Case{"bogus", 2},
};

struct Run {
    std::string output;
    int exit_code = -1;
};

// Runs the CLI through the shell, capturing stdout and stderr together.
inline Run run(const std::string& exe, std::string_view args)
{
    Run r;
    const std::string cmd = "'" + exe + "' " + std::string(args) + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace cli_matrix
