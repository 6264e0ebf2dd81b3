#include "zerosum/weights.hpp"

#include "zerosum/error.hpp"

#include <algorithm>
#include <charconv>

namespace zerosum {

WeightSet::WeightSet(Value n, Kind kind, unsigned power, std::vector<Value> values)
    : n_(n), kind_(kind), power_(power), values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    require(!values_.empty(), "weight set must be nonempty");
    require(values_.front() != 0, "weight set must not contain 0");
    require(values_.back() < n_, "weights must be residues below " + std::to_string(n_));
    switch (kind_) {
    case Kind::One:
    case Kind::UnitsPow: unit_subgroup_ = true; break;
    case Kind::AllNonzero: unit_subgroup_ = is_prime(n_); break;
    case Kind::Explicit: {
        const ZnContext ctx(n_);
        unit_subgroup_ = std::all_of(values_.begin(), values_.end(), [&](Value a) { return ctx.is_unit(a); }) &&
                         std::all_of(values_.begin(), values_.end(), [&](Value a) {
                             return std::all_of(values_.begin(), values_.end(),
                                                [&](Value b) { return contains(mul_mod(a, b, n_)); });
                         });
        break;
    }
    }
}

WeightSet WeightSet::one(Value n) {
    require(n >= 2, "modulus must be at least 2");
    return WeightSet(n, Kind::One, 0, {1});
}

WeightSet WeightSet::all_nonzero(Value n) {
    require(n >= 2, "modulus must be at least 2");
    std::vector<Value> values(n - 1);
    for (Value i = 0; i + 1 < n; ++i) values[i] = i + 1;
    return WeightSet(n, Kind::AllNonzero, 0, std::move(values));
}

WeightSet WeightSet::units_pow(const ZnContext& ctx, unsigned j) {
    return WeightSet(ctx.modulus(), Kind::UnitsPow, j, unit_powers(ctx, j));
}

WeightSet WeightSet::explicit_set(Value n, std::span<const Value> values) {
    require(n >= 2, "modulus must be at least 2");
    return WeightSet(n, Kind::Explicit, 0, {values.begin(), values.end()});
}

bool WeightSet::contains(Value a) const noexcept { return std::binary_search(values_.begin(), values_.end(), a); }

std::vector<Value> WeightSet::stabilizer() const {
    std::vector<Value> out;
    for (Value u : units(ZnContext(n_))) {
        const bool keeps = std::all_of(values_.begin(), values_.end(),
                                       [&](Value a) { return contains(mul_mod(u, a, n_)); });
        if (keeps) out.push_back(u);
    }
    return out;
}

std::string WeightSet::describe() const {
    switch (kind_) {
    case Kind::One: return "one";
    case Kind::AllNonzero: return "nonzero";
    case Kind::UnitsPow: return power_ == 1 ? "units" : "units^" + std::to_string(power_);
    case Kind::Explicit: break;
    }
    std::string out = "set:";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

namespace {

Value parse_value(std::string_view text, const std::string& context) {
    Value v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    require(ec == std::errc{} && ptr == end && !text.empty(), "malformed number '" + std::string(text) + "' in " + context);
    return v;
}

} // namespace

WeightSet parse_weight_set(const ZnContext& ctx, const std::string& descriptor) {
    if (descriptor == "one") return WeightSet::one(ctx.modulus());
    if (descriptor == "nonzero") return WeightSet::all_nonzero(ctx.modulus());
    if (descriptor == "units") return WeightSet::units_pow(ctx, 1);
    if (descriptor.rfind("units^", 0) == 0) {
        const Value j = parse_value(std::string_view(descriptor).substr(6), "weight descriptor");
        require(j >= 1, "units power must be at least 1");
        return WeightSet::units_pow(ctx, j);
    }
    if (descriptor.rfind("set:", 0) == 0) {
        std::vector<Value> values;
        std::string_view rest = std::string_view(descriptor).substr(4);
        while (true) {
            const auto comma = rest.find(',');
            values.push_back(parse_value(rest.substr(0, comma), "weight set"));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return WeightSet::explicit_set(ctx.modulus(), values);
    }
    fail(ErrorKind::InvalidArgument, "unknown weight descriptor '" + descriptor + "'");
}

bool coset_test_pair(Residue x, Residue y, const WeightSet& weights) {
    const Value p = weights.modulus();
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "coset test needs a prime modulus, got " + std::to_string(p));
    require(x.modulus == p && y.modulus == p, "coset test: residues and weights disagree on the modulus");
    require(weights.is_unit_subgroup(), "coset test needs a subgroup of U(p) as weights");
    if (x.value == 0 || y.value == 0) return false;
    const Value ratio = mul_mod(x.value, *inverse_mod(neg_mod(y.value, p), p), p);
    return !weights.contains(ratio);
}

} // namespace zerosum
