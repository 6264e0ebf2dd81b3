#include "zerosum/family.hpp"

#include "zerosum/error.hpp"

#include <algorithm>

namespace zerosum {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

bool all_primes_at_least(const ZnContext& ctx, Value bound) {
    const auto f = ctx.factorization();
    return std::all_of(f.begin(), f.end(), [bound](const PrimePower& pp) { return pp.prime >= bound; });
}

bool cube_regime(const ZnContext& ctx) {
    const Value n = ctx.modulus();
    return ctx.is_squarefree() && n % 2 != 0 && n % 7 != 0 && n % 13 != 0;
}

} // namespace

std::string to_string(Family family) {
    switch (family) {
    case Family::One: return "one";
    case Family::Units: return "units";
    case Family::UnitsSquared: return "units^2";
    case Family::UnitsCubed: return "units^3";
    }
    return "?";
}

Family parse_family(const std::string& text) {
    if (text == "one") return Family::One;
    if (text == "units" || text == "units^1") return Family::Units;
    if (text == "units^2") return Family::UnitsSquared;
    if (text == "units^3") return Family::UnitsCubed;
    fail(ErrorKind::InvalidArgument, "unknown family '" + text + "' (expected one, units, units^2, units^3)");
}

std::optional<Family> family_of(const WeightSet& weights) {
    switch (weights.kind()) {
    case WeightSet::Kind::One: return Family::One;
    case WeightSet::Kind::UnitsPow:
        if (weights.power() == 1) return Family::Units;
        if (weights.power() == 2) return Family::UnitsSquared;
        if (weights.power() == 3) return Family::UnitsCubed;
        return std::nullopt;
    default: return std::nullopt;
    }
}

WeightSet weight_set(Family family, const ZnContext& ctx) {
    if (family == Family::One) return WeightSet::one(ctx.modulus());
    return WeightSet::units_pow(ctx, unit_power(family));
}

unsigned unit_power(Family family) noexcept {
    switch (family) {
    case Family::One: return 0;
    case Family::Units: return 1;
    case Family::UnitsSquared: return 2;
    case Family::UnitsCubed: return 3;
    }
    return 0;
}

bool family_supported(Family family, const ZnContext& ctx) {
    switch (family) {
    case Family::One: return true;
    case Family::Units: return ctx.modulus() % 2 != 0;
    case Family::UnitsSquared: return all_primes_at_least(ctx, 7);
    case Family::UnitsCubed: return cube_regime(ctx);
    }
    return false;
}

void require_supported(Family family, const ZnContext& ctx) {
    if (family_supported(family, ctx)) return;
    const std::string n = std::to_string(ctx.modulus());
    switch (family) {
    case Family::Units: fail(ErrorKind::DomainRejected, "units family needs odd n, got " + n);
    case Family::UnitsSquared:
        fail(ErrorKind::DomainRejected, "units^2 family needs every prime divisor >= 7, got n = " + n);
    case Family::UnitsCubed:
        fail(ErrorKind::DomainRejected, "units^3 family needs squarefree n coprime to 2*7*13, got n = " + n);
    case Family::One: break;
    }
    fail(ErrorKind::Internal, "unsupported family");
}

std::optional<KnownConstant> known_constant(Family family, const ZnContext& ctx) {
    const Value n = ctx.modulus();
    switch (family) {
    case Family::One: return KnownConstant{n, "C(n) = n"};
    case Family::Units:
        if (n == 2) return KnownConstant{2, "C_U(p)(p) = 2"};
        if (n % 2 != 0) return KnownConstant{ipow(2, ctx.omega()), "C_U(n)(n) = 2^Omega(n), n odd"};
        return std::nullopt;
    case Family::UnitsSquared:
        if (n == 2) return KnownConstant{2, "C_Q_2(2) = 2"};
        if (ctx.is_prime()) return KnownConstant{3, "C_Q_p(p) = 3, p odd prime"};
        if (all_primes_at_least(ctx, 7))
            return KnownConstant{ipow(3, ctx.omega()), "C_U(n)^2(n) = 3^Omega(n), every prime divisor >= 7"};
        return std::nullopt;
    case Family::UnitsCubed:
        if (n == 2) return KnownConstant{2, "C_U(2)^3(2) = 2"};
        if (n == 7) return KnownConstant{4, "C_U(7)^3(7) = 4"};
        if (ctx.is_prime()) {
            if (n % 3 != 1) return KnownConstant{2, "C_U(p)^3(p) = 2, p != 1 mod 3"};
            return KnownConstant{3, "C_U(p)^3(p) = 3, p = 1 mod 3, p != 7"};
        }
        if (cube_regime(ctx)) {
            std::uint64_t value = 1;
            for (const auto& pp : ctx.factorization()) value *= pp.prime % 3 == 1 ? 3 : 2;
            return KnownConstant{value, "C_U(n)^3(n) = 2^Omega(n2) 3^Omega(n1), n squarefree, (n, 2*7*13) = 1"};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<KnownConstant> known_constant(const WeightSet& weights, const ZnContext& ctx) {
    require(weights.modulus() == ctx.modulus(), "weights and context disagree on the modulus");
    if (weights.kind() == WeightSet::Kind::AllNonzero) return KnownConstant{2, "C_A(n) = 2, A = Z_n \\ {0}"};
    if (auto family = family_of(weights)) return known_constant(*family, ctx);
    return std::nullopt;
}

std::uint64_t formula_constant(Family family, const ZnContext& ctx) {
    if (auto k = known_constant(family, ctx)) return k->value;
    fail(ErrorKind::DomainRejected,
         "no closed-form constant for " + to_string(family) + " at n = " + std::to_string(ctx.modulus()));
}

unsigned split_arity(Family family, Value p) {
    switch (family) {
    case Family::Units: return 2;
    case Family::UnitsSquared: return 3;
    case Family::UnitsCubed: return p % 3 == 1 ? 3 : 2;
    case Family::One: break;
    }
    fail(ErrorKind::DomainRejected, "the one-weight family has no prime split");
}

} // namespace zerosum
