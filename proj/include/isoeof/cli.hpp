// Command-line surface. All state lives in the flags (no config files, no
// environment), so a (command, flags, seed) triple pins the output bytes.
//
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 flag validation or usage error.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace isoeof::cli {

enum class Command { eof, curve, rnm, verify_conjecture, twirl_mc, oracle };
enum class Format { json, csv };

struct RunConfig {
    Command command = Command::eof;
    int d = 3;
    std::optional<double> F;
    std::optional<int> points;
    std::optional<int> samples;
    std::optional<int> restarts;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    std::optional<std::string> out;
    std::optional<Format> format;
    bool numeric = false;  ///< eof only: route through the numeric envelope
};

struct RunResult {
    int exit_code = 0;
    std::string output;  ///< bytes for stdout (or --out)
    std::string error;   ///< bytes for stderr
};

/// Validates every numeric flag against the target operation's preconditions,
/// then executes. Never throws for user input; failures surface as exit codes.
RunResult run(const RunConfig& config);

/// argv entry point: parse flags, run, write output to stdout or --out.
int main_entry(int argc, char** argv);

}  // namespace isoeof::cli
