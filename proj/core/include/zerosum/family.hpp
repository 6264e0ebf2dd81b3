#pragma once

// The weight families with known constants and characterized extremal sequences.

#include "zerosum/ring.hpp"
#include "zerosum/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace zerosum {

enum class Family { One, Units, UnitsSquared, UnitsCubed };

[[nodiscard]] std::string to_string(Family family);
/// Accepts the weight descriptors one, units, units^2, units^3.
[[nodiscard]] Family parse_family(const std::string& text);
[[nodiscard]] std::optional<Family> family_of(const WeightSet& weights);

[[nodiscard]] WeightSet weight_set(Family family, const ZnContext& ctx);

/// The exponent j with A = U(n)^j (One -> 0).
[[nodiscard]] unsigned unit_power(Family family) noexcept;

/// True when the builders and the decomposer support (family, n):
///   One: any n; Units: n odd; UnitsSquared: every prime divisor >= 7;
///   UnitsCubed: n squarefree and coprime to 2*7*13.
[[nodiscard]] bool family_supported(Family family, const ZnContext& ctx);

/// Throws DomainRejected with a reason when !family_supported.
void require_supported(Family family, const ZnContext& ctx);

struct KnownConstant {
    std::uint64_t value = 0;
    /// The closed-form statement the value comes from, e.g. "C_U(n)(n) = 2^Omega(n), n odd".
    std::string statement;
};

/// Closed-form C_A(n) for the weight sets where one is known; nullopt otherwise.
[[nodiscard]] std::optional<KnownConstant> known_constant(const WeightSet& weights, const ZnContext& ctx);
[[nodiscard]] std::optional<KnownConstant> known_constant(Family family, const ZnContext& ctx);

/// Like known_constant(family, ctx) but throws DomainRejected when no formula applies.
[[nodiscard]] std::uint64_t formula_constant(Family family, const ZnContext& ctx);

/// 2 or 3: how many parts an extremal sequence splits into around structural prime p.
[[nodiscard]] unsigned split_arity(Family family, Value p);

} // namespace zerosum
