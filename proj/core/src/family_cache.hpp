#pragma once

// Memoized weight sets and constants for the hot paths of decomposition. Safe for concurrent use.

#include "zerosum/family.hpp"

namespace zerosum::detail {

/// U(n)^j, or {1} for j == 0. The reference stays valid for the life of the process.
[[nodiscard]] const WeightSet& cached_unit_powers(Value n, unsigned j);

[[nodiscard]] inline const WeightSet& cached_weights(Family family, Value n) {
    return cached_unit_powers(n, unit_power(family));
}

[[nodiscard]] std::uint64_t cached_formula_constant(Family family, Value n);

} // namespace zerosum::detail
