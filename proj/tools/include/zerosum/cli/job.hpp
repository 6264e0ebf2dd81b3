#pragma once

#include "zerosum/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zerosum::cli {

struct JobSpec {
    std::string command;
    Value n = 0;
    std::string weights;
    std::vector<std::string> sequences;
    std::optional<std::string> recipe;
    std::optional<std::uint64_t> seed;
    bool up_to_equivalence = false;
    bool count_only = false;
    std::uint64_t max_sequences = 0;
    std::uint64_t max_nodes = 0;
    std::uint64_t max_time_ms = 0;
    /// verify-theorems: largest modulus exercised.
    Value scope = 0;
    std::optional<std::string> cache_path;
    bool timing = true;
    std::optional<std::string> output;
};

struct RunResult {
    int exit_code = 0;
    std::string json;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_rejected = 1;
inline constexpr int exit_budget = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_internal = 70;

/// Runs one job and renders its JSON document. Never throws for library errors; they are
/// mapped onto the exit code and an "error" member.
[[nodiscard]] RunResult run(const JobSpec& job);

/// Parses argv into a job; throws zerosum::Error(InvalidArgument) with the usage text on
/// malformed input. Returns nullopt when help was requested (help text in `out`).
[[nodiscard]] std::optional<JobSpec> parse_command_line(int argc, const char* const* argv, std::string& out);

} // namespace zerosum::cli
