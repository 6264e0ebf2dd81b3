#pragma once

// A-equivalence: S ~ T when T = (c*a_1*x_1, ..., c*a_k*x_k) for a unit c and weights a_i in A.

#include "zerosum/sequence.hpp"
#include "zerosum/weights.hpp"

#include <cstdint>
#include <map>
#include <shared_mutex>

namespace zerosum {

struct EquivClass {
    /// Lexicographically least member of the orbit.
    Seq canonical;
    std::uint64_t orbit_size = 0;
    friend bool operator==(const EquivClass&, const EquivClass&) = default;
};

[[nodiscard]] EquivClass canonicalize(const Seq& seq, const WeightSet& weights);

[[nodiscard]] bool are_equivalent(const Seq& a, const Seq& b, const WeightSet& weights);

/// (c*a_1*x_1, ..., c*a_k*x_k). c must be a unit, every a_i a weight.
[[nodiscard]] Seq apply_equivalence(const Seq& seq, Value c, std::span<const Value> term_weights,
                                    const WeightSet& weights);

/// canonicalize() with a per-instance memo. Safe for concurrent use.
class Canonicalizer {
public:
    explicit Canonicalizer(WeightSet weights) : weights_(std::move(weights)) {}

    [[nodiscard]] EquivClass operator()(const Seq& seq);
    [[nodiscard]] std::size_t memo_size() const;

private:
    WeightSet weights_;
    mutable std::shared_mutex mutex_;
    std::map<Seq, EquivClass> memo_;
};

} // namespace zerosum
