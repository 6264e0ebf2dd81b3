#pragma once

#include "zerosum/ring.hpp"

#include <span>
#include <string>
#include <vector>

namespace zerosum {

/// A nonempty set of nonzero residues mod n used as term weights.
/// The explicit residue set is always materialized at construction.
class WeightSet {
public:
    enum class Kind { Explicit, UnitsPow, AllNonzero, One };

    [[nodiscard]] static WeightSet one(Value n);
    [[nodiscard]] static WeightSet all_nonzero(Value n);
    [[nodiscard]] static WeightSet units_pow(const ZnContext& ctx, unsigned j);
    /// Duplicates are removed; 0 or values >= n are rejected.
    [[nodiscard]] static WeightSet explicit_set(Value n, std::span<const Value> values);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    /// The exponent j for UnitsPow, otherwise 0.
    [[nodiscard]] unsigned power() const noexcept { return power_; }
    [[nodiscard]] Value modulus() const noexcept { return n_; }
    [[nodiscard]] std::span<const Value> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] bool contains(Value a) const noexcept;

    /// True when every weight is a unit and the set is closed under multiplication,
    /// i.e. it is a subgroup of U(n).
    [[nodiscard]] bool is_unit_subgroup() const noexcept { return unit_subgroup_; }

    /// Units u with u*A = A, in increasing order. Multiplying a term by such u never
    /// changes which weighted sums a window reaches.
    [[nodiscard]] std::vector<Value> stabilizer() const;

    /// Command-line style descriptor: one, units, units^2, nonzero, set:1,4
    [[nodiscard]] std::string describe() const;

    friend bool operator==(const WeightSet& a, const WeightSet& b) noexcept {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }

private:
    WeightSet(Value n, Kind kind, unsigned power, std::vector<Value> values);

    Value n_;
    Kind kind_;
    unsigned power_;
    std::vector<Value> values_;
    bool unit_subgroup_ = false;
};

/// Parses a descriptor produced by WeightSet::describe ("units^3", "set:1,4", ...).
[[nodiscard]] WeightSet parse_weight_set(const ZnContext& ctx, const std::string& descriptor);

[[nodiscard]] inline WeightSet units_pow(const ZnContext& ctx, unsigned j) { return WeightSet::units_pow(ctx, j); }

/// For a subgroup A of U(p), p prime: true iff (x, y) has no A-weighted zero-sum
/// subsequence, i.e. x, y are nonzero and x and -y lie in different cosets of A.
[[nodiscard]] bool coset_test_pair(Residue x, Residue y, const WeightSet& weights);

} // namespace zerosum
