#include "zerosum/engine.hpp"

#include "zerosum/error.hpp"

#include <algorithm>

namespace zerosum {

namespace {

void require_same_modulus(const Seq& seq, const WeightSet& weights) {
    if (seq.modulus() != weights.modulus())
        fail(ErrorKind::InvalidArgument, "sequence over Z_" + std::to_string(seq.modulus()) +
                                                    " but weights over Z_" + std::to_string(weights.modulus()));
}

} // namespace

ReachSet term_image(Value x, const WeightSet& weights) {
    const Value n = weights.modulus();
    ReachSet image(n);
    for (Value a : weights.values()) image.insert(mul_mod(a, x % n, n));
    return image;
}

ReachSet window_reach(const Seq& seq, const WeightSet& weights) {
    require_same_modulus(seq, weights);
    require(!seq.empty(), "window_reach: the empty sequence has no weighted sum");
    ReachSet reach = ReachSet::singleton(seq.modulus(), 0);
    for (Value x : seq.terms()) reach = reach.sumset(term_image(x, weights));
    return reach;
}

bool is_weighted_zero_sum(const Seq& seq, const WeightSet& weights) { return window_reach(seq, weights).contains(0); }

namespace {

void image_values(Value x, const WeightSet& weights, std::vector<Value>& out) {
    const Value n = weights.modulus();
    out.clear();
    for (Value a : weights.values()) out.push_back(mul_mod(a, x, n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

// Smallest start of a zero window ending at `end`, given that one exists.
Window locate_zero_window(const Seq& seq, const WeightSet& weights, std::size_t end) {
    std::optional<std::size_t> first;
    ReachSet reach = ReachSet::singleton(seq.modulus(), 0);
    for (std::size_t start = end + 1; start-- > 0;) {
        reach = reach.sumset(term_image(seq[start], weights));
        if (reach.contains(0)) first = start;
    }
    if (!first) fail(ErrorKind::Internal, "zero window vanished while locating it");
    return {*first, end};
}

} // namespace

std::optional<Window> has_zero_window(const Seq& seq, const WeightSet& weights) {
    require_same_modulus(seq, weights);
    // state: every sum reached by a window ending at the previous term, plus 0 for the empty window.
    const Value n = seq.modulus();
    std::vector<std::uint64_t> state(bits::words_for(n), 0);
    std::vector<std::uint64_t> next(state.size(), 0);
    std::vector<Value> image;
    bits::set(state, 0);
    for (std::size_t end = 0; end < seq.size(); ++end) {
        image_values(seq[end], weights, image);
        for (Value t : image)
            if (bits::test(state, neg_mod(t, n))) return locate_zero_window(seq, weights, end);
        std::fill(next.begin(), next.end(), 0);
        for (Value t : image) bits::rotate_or(next, state, n, t);
        bits::set(next, 0);
        state.swap(next);
    }
    return std::nullopt;
}

bool is_extremal(const Seq& seq, const WeightSet& weights, std::uint64_t constant) {
    if (constant == 0 || seq.size() + 1 != constant) return false;
    return !has_zero_window(seq, weights).has_value();
}

bool prefix_sum_free(const Seq& seq) {
    const Value n = seq.modulus();
    std::vector<bool> seen(n, false);
    Value sum = 0;
    seen[0] = true;
    for (Value x : seq.terms()) {
        sum = add_mod(sum, x, n);
        if (seen[sum]) return false;
        seen[sum] = true;
    }
    return true;
}

bool crt_zero_sum_check(const Seq& seq, unsigned j) {
    require(!seq.empty(), "crt_zero_sum_check: empty sequence");
    const ZnContext ctx(seq.modulus());
    for (const auto& pp : ctx.factorization()) {
        const Value q = pp.value();
        const Seq local = natural_map(seq, q);
        if (!is_weighted_zero_sum(local, WeightSet::units_pow(ZnContext(q), j))) return false;
    }
    return true;
}

bool triple_unit_cover(const ZnContext& ctx, Value x1, Value x2, Value x3) {
    require(ctx.is_prime_power(), "triple_unit_cover needs a prime power modulus");
    const Value n = ctx.modulus();
    for (Value x : {x1, x2, x3})
        require(x < n && ctx.is_unit(x), "triple_unit_cover: " + std::to_string(x) + " is not a unit mod " + std::to_string(n));
    const auto squares = WeightSet::units_pow(ctx, 2);
    return window_reach(Seq(n, {x1, x2, x3}), squares).full();
}

} // namespace zerosum
