#pragma once

// Exact arithmetic in Z_n: factorization, units, reduction maps and unit lifting.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zerosum {

using Value = std::uint32_t;

struct PrimePower {
    Value prime = 0;
    unsigned exponent = 0;

    [[nodiscard]] Value value() const noexcept;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

[[nodiscard]] bool is_prime(Value n) noexcept;
[[nodiscard]] std::vector<PrimePower> factorize(Value n);

[[nodiscard]] constexpr Value mul_mod(Value a, Value b, Value n) noexcept {
    return static_cast<Value>(std::uint64_t{a} * b % n);
}
[[nodiscard]] constexpr Value add_mod(Value a, Value b, Value n) noexcept {
    return static_cast<Value>((std::uint64_t{a} + b) % n);
}
[[nodiscard]] constexpr Value neg_mod(Value a, Value n) noexcept { return a == 0 ? 0 : n - a; }

[[nodiscard]] Value pow_mod(Value base, std::uint64_t exponent, Value n) noexcept;
[[nodiscard]] std::optional<Value> inverse_mod(Value a, Value n) noexcept;

/// Z_n together with its factorization. Immutable once built.
class ZnContext {
public:
    explicit ZnContext(Value n);

    [[nodiscard]] Value modulus() const noexcept { return n_; }
    [[nodiscard]] std::span<const PrimePower> factorization() const noexcept { return factors_; }
    /// Number of prime factors counted with multiplicity.
    [[nodiscard]] unsigned omega() const noexcept { return omega_; }
    [[nodiscard]] std::vector<Value> prime_divisors() const;
    [[nodiscard]] bool is_prime() const noexcept { return factors_.size() == 1 && factors_[0].exponent == 1; }
    [[nodiscard]] bool is_prime_power() const noexcept { return factors_.size() == 1; }
    [[nodiscard]] bool is_squarefree() const noexcept;
    [[nodiscard]] bool divides(Value d) const noexcept { return d != 0 && n_ % d == 0; }
    [[nodiscard]] bool is_unit(Value x) const noexcept;
    [[nodiscard]] Value euler_phi() const noexcept;

    friend bool operator==(const ZnContext& a, const ZnContext& b) noexcept { return a.n_ == b.n_; }

private:
    Value n_;
    std::vector<PrimePower> factors_;
    unsigned omega_ = 0;
};

struct Residue {
    Value value = 0;
    Value modulus = 0;

    /// Validating constructor: 0 <= value < modulus, modulus >= 2.
    [[nodiscard]] static Residue of(Value value, Value modulus);

    friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// Units of Z_n in increasing order.
[[nodiscard]] std::vector<Value> units(const ZnContext& ctx);

/// { x^j : x in U(n) } in increasing order.
[[nodiscard]] std::vector<Value> unit_powers(const ZnContext& ctx, unsigned j);

/// Reduction Z_n -> Z_m for m | n.
[[nodiscard]] Residue natural_map(Residue x, Value m);

enum class LiftKind { Unit, UnitSquare };

/// Lifts b in U(m) to a in U(n) (or U(n)^2) with a = b mod m, scanning b, b+m, b+2m, ...
[[nodiscard]] Residue lift_unit(Residue b, const ZnContext& ctx, LiftKind kind = LiftKind::Unit);

/// n = n1 * n2 with p | n1 iff p = 1 (mod 3). Requires squarefree n.
struct CubeSplit {
    Value n1 = 1;
    Value n2 = 1;
    friend bool operator==(const CubeSplit&, const CubeSplit&) = default;
};

[[nodiscard]] CubeSplit cube_split(const ZnContext& ctx);

[[nodiscard]] std::string to_string(Residue r);

} // namespace zerosum
