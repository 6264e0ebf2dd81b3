#pragma once

#include "zerosum/search.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zerosum::cli {

enum class Verdict { Passed, Failed, Skipped };

[[nodiscard]] const char* to_string(Verdict verdict) noexcept;

struct StatementReport {
    std::string statement;
    Verdict verdict = Verdict::Skipped;
    std::uint64_t cases = 0;
    std::string detail;
};

/// Runs every statement that has at least one modulus in [2, scope]. The budget applies to
/// each statement separately; exhausting it yields Skipped, never Passed.
[[nodiscard]] std::vector<StatementReport> verify_theorems(Value scope, SearchBudget budget = {});

} // namespace zerosum::cli
