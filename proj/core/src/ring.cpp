#include "zerosum/ring.hpp"

#include "zerosum/error.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace zerosum {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::DomainRejected: return "domain-rejected";
    case ErrorKind::NotExtremal: return "not-extremal";
    case ErrorKind::CharacterizationViolated: return "characterization-violated";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

Value PrimePower::value() const noexcept {
    Value v = 1;
    for (unsigned i = 0; i < exponent; ++i) v *= prime;
    return v;
}

bool is_prime(Value n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<PrimePower> factorize(Value n) {
    require(n >= 1, "factorize: n must be positive");
    std::vector<PrimePower> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        PrimePower pp{static_cast<Value>(d), 0};
        while (n % d == 0) {
            n /= static_cast<Value>(d);
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

Value pow_mod(Value base, std::uint64_t exponent, Value n) noexcept {
    if (n == 1) return 0;
    Value result = 1;
    base %= n;
    while (exponent > 0) {
        if (exponent & 1U) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        exponent >>= 1U;
    }
    return result;
}

std::optional<Value> inverse_mod(Value a, Value n) noexcept {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = n, new_r = a % n;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) return std::nullopt;
    if (t < 0) t += n;
    return static_cast<Value>(t);
}

ZnContext::ZnContext(Value n) : n_(n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "modulus must be at least 2, got " + std::to_string(n));
    factors_ = factorize(n);
    for (const auto& f : factors_) omega_ += f.exponent;
}

std::vector<Value> ZnContext::prime_divisors() const {
    std::vector<Value> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.prime);
    return out;
}

bool ZnContext::is_squarefree() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

bool ZnContext::is_unit(Value x) const noexcept { return std::gcd(x % n_, n_) == 1; }

Value ZnContext::euler_phi() const noexcept {
    Value phi = 1;
    for (const auto& f : factors_) phi *= (f.prime - 1) * (f.value() / f.prime);
    return phi;
}

Residue Residue::of(Value value, Value modulus) {
    require(modulus >= 2, "residue modulus must be at least 2");
    require(value < modulus,
            "residue " + std::to_string(value) + " out of range for modulus " + std::to_string(modulus));
    return {value, modulus};
}

std::vector<Value> units(const ZnContext& ctx) {
    std::vector<Value> out;
    for (Value x = 1; x < ctx.modulus(); ++x)
        if (ctx.is_unit(x)) out.push_back(x);
    return out;
}

std::vector<Value> unit_powers(const ZnContext& ctx, unsigned j) {
    require(j >= 1, "power must be at least 1");
    std::vector<Value> out;
    for (Value u : units(ctx)) out.push_back(pow_mod(u, j, ctx.modulus()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Residue natural_map(Residue x, Value m) {
    require(m >= 1 && x.modulus % m == 0,
            "natural map: " + std::to_string(m) + " does not divide " + std::to_string(x.modulus));
    require(m >= 2, "natural map target modulus must be at least 2");
    return {x.value % m, m};
}

Residue lift_unit(Residue b, const ZnContext& ctx, LiftKind kind) {
    const Value n = ctx.modulus();
    const Value m = b.modulus;
    require(m >= 2 && n % m == 0, "lift_unit: " + std::to_string(m) + " does not divide " + std::to_string(n));
    require(std::gcd(b.value, m) == 1, "lift_unit: " + std::to_string(b.value) + " is not a unit mod " + std::to_string(m));

    std::vector<Value> squares;
    if (kind == LiftKind::UnitSquare) {
        const auto sq_m = unit_powers(ZnContext(m), 2);
        require(std::binary_search(sq_m.begin(), sq_m.end(), b.value),
                "lift_unit: " + std::to_string(b.value) + " is not a unit square mod " + std::to_string(m));
        squares = unit_powers(ctx, 2);
    }

    // One full period b, b+m, ..., b+(n/m-1)m covers every preimage of b.
    for (Value a = b.value; a < n; a += m) {
        if (!ctx.is_unit(a)) continue;
        if (kind == LiftKind::UnitSquare && !std::binary_search(squares.begin(), squares.end(), a)) continue;
        return {a, n};
    }
    fail(ErrorKind::Internal, "lift_unit: no preimage of " + std::to_string(b.value) + " mod " + std::to_string(m) +
                                  " found in Z_" + std::to_string(n));
}

CubeSplit cube_split(const ZnContext& ctx) {
    if (!ctx.is_squarefree())
        fail(ErrorKind::DomainRejected, "cube split requires squarefree n, got " + std::to_string(ctx.modulus()));
    CubeSplit split;
    for (const auto& f : ctx.factorization()) {
        if (f.prime % 3 == 1)
            split.n1 *= f.prime;
        else
            split.n2 *= f.prime;
    }
    return split;
}

std::string to_string(Residue r) { return std::to_string(r.value) + " mod " + std::to_string(r.modulus); }

} // namespace zerosum
