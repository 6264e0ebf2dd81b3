#pragma once

// Exhaustive search for C_A(n) and enumeration of A-extremal sequences.

#include "zerosum/sequence.hpp"
#include "zerosum/weights.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zerosum {

/// Largest modulus the exhaustive search accepts; its states are n-bit masks.
inline constexpr Value max_search_modulus = 4096;

/// Zero means unlimited.
struct SearchBudget {
    std::uint64_t max_nodes = 0;
    std::chrono::milliseconds max_time{0};
};

enum class SearchStatus { Exact, Unknown };

struct SearchReport {
    Value n = 0;
    std::string weights;
    SearchStatus status = SearchStatus::Unknown;
    /// C_A(n); only meaningful when status == Exact.
    std::uint64_t constant = 0;
    /// 1 + length of the longest zero-window-free sequence actually exhibited.
    std::uint64_t lower_bound = 1;
    /// Exact: the lexicographically least sequence of length constant-1.
    /// Unknown: the longest sequence found before the budget ran out.
    Seq witness;
    std::optional<std::uint64_t> extremal_count;
    std::uint64_t nodes_visited = 0;
    std::chrono::nanoseconds elapsed{};
};

[[nodiscard]] SearchReport compute_constant(const ZnContext& ctx, const WeightSet& weights, SearchBudget budget = {});

struct EnumerateOptions {
    /// One canonical representative per A-equivalence class (A must be a subgroup of U(n)).
    bool up_to_equivalence = false;
    /// Only count; no sequences are materialized.
    bool count_only = false;
    /// Stop listing after this many sequences (0 = unlimited); the result is then incomplete.
    std::uint64_t max_sequences = 0;
    SearchBudget budget;
};

struct Enumeration {
    std::vector<Seq> sequences;
    /// Number of sequences (or classes) in total, not just those listed.
    std::uint64_t count = 0;
    /// False when the search budget ran out; count and listing are then partial.
    bool complete = true;
    /// The listing stopped at max_sequences.
    bool truncated = false;
};

/// All zero-window-free sequences of length constant-1.
[[nodiscard]] Enumeration enumerate_extremal(const ZnContext& ctx, const WeightSet& weights, std::uint64_t constant,
                                             const EnumerateOptions& options = {});

/// Streams every zero-window-free sequence of the given length in lexicographic order.
/// The visitor returns false to stop early. Returns true when the stream ran to completion.
using SequenceVisitor = std::function<bool(std::span<const Value>)>;
bool for_each_zero_window_free(const ZnContext& ctx, const WeightSet& weights, std::size_t length,
                               const SequenceVisitor& visit, SearchBudget budget = {});

/// Like for_each_zero_window_free, but visits only sequences whose first term is the least
/// element of its U(n)-orbit and whose later terms are the least residue with their weighted
/// image {a*x : a in A}. Every zero-window-free sequence maps onto at least one of these
/// by global unit scaling and per-term stabilizer multiplication.
bool for_each_reduced_zero_window_free(const ZnContext& ctx, const WeightSet& weights, std::size_t length,
                                       const SequenceVisitor& visit, SearchBudget budget = {});

} // namespace zerosum
