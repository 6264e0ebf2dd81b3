#pragma once

// Window-level decisions: weighted reach of a window, zero windows, extremality.

#include "zerosum/reach.hpp"
#include "zerosum/sequence.hpp"
#include "zerosum/weights.hpp"

#include <cstdint>
#include <optional>

namespace zerosum {

/// { a * x : a in A }
[[nodiscard]] ReachSet term_image(Value x, const WeightSet& weights);

/// All weighted sums sum a_i x_i with a_i in A. Rejects an empty sequence.
[[nodiscard]] ReachSet window_reach(const Seq& seq, const WeightSet& weights);

/// 0 in window_reach(seq, A).
[[nodiscard]] bool is_weighted_zero_sum(const Seq& seq, const WeightSet& weights);

/// Inclusive, 0-based term range [start, end].
struct Window {
    std::size_t start = 0;
    std::size_t end = 0;
    friend bool operator==(const Window&, const Window&) = default;
};

/// First window (ordered by end, then start) that is an A-weighted zero-sum, if any.
[[nodiscard]] std::optional<Window> has_zero_window(const Seq& seq, const WeightSet& weights);

/// len(seq) == constant - 1 and no zero window.
[[nodiscard]] bool is_extremal(const Seq& seq, const WeightSet& weights, std::uint64_t constant);

/// Prefix sums 0, x1, x1+x2, ... pairwise distinct.
[[nodiscard]] bool prefix_sum_free(const Seq& seq);

/// Decides "seq is a U(n)^j-weighted zero-sum" one prime power p^r || n at a time,
/// with weights U(p^r)^j on seq mod p^r, and returns the conjunction.
[[nodiscard]] bool crt_zero_sum_check(const Seq& seq, unsigned j);

/// U(p^r)^2 x1 + U(p^r)^2 x2 + U(p^r)^2 x3 == Z_{p^r} for units x1, x2, x3.
[[nodiscard]] bool triple_unit_cover(const ZnContext& ctx, Value x1, Value x2, Value x3);

} // namespace zerosum
