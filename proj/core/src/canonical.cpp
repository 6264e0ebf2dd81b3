#include "zerosum/canonical.hpp"

#include "zerosum/error.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace zerosum {

namespace {

constexpr std::uint64_t kMaxExplicitOrbit = 2'000'000;

// Orbits of a general weight set are enumerated member by member.
std::uint64_t explicit_orbit_size(const Seq& seq, const WeightSet& weights, std::span<const Value> unit_group) {
    const Value n = seq.modulus();
    std::uint64_t bound = unit_group.size();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        bound *= weights.size();
        require(bound <= kMaxExplicitOrbit, "orbit too large to enumerate explicitly");
    }
    std::set<std::vector<Value>> members;
    std::vector<Value> current(seq.size());
    std::vector<std::size_t> choice(seq.size());
    const auto w = weights.values();
    for (Value c : unit_group) {
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            for (std::size_t i = 0; i < seq.size(); ++i) current[i] = mul_mod(c, mul_mod(w[choice[i]], seq[i], n), n);
            members.insert(current);
            std::size_t i = 0;
            while (i < choice.size() && ++choice[i] == w.size()) choice[i++] = 0;
            if (i == choice.size()) break;
        }
    }
    return members.size();
}

} // namespace

EquivClass canonicalize(const Seq& seq, const WeightSet& weights) {
    const Value n = seq.modulus();
    require(weights.modulus() == n, "canonicalize: weights and sequence disagree on the modulus");
    const auto unit_group = units(ZnContext(n));
    const auto w = weights.values();

    // For a fixed c the orbit slice is a product of per-term sets, so its least member is
    // the termwise minimum.
    std::vector<Value> best;
    std::vector<Value> current(seq.size());
    for (Value c : unit_group) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            Value m = n;
            for (Value a : w) m = std::min(m, mul_mod(c, mul_mod(a, seq[i], n), n));
            current[i] = m;
        }
        if (best.empty() || current < best) best = current;
    }

    EquivClass out{Seq(n, best), 0};
    if (!weights.is_unit_subgroup()) {
        out.orbit_size = explicit_orbit_size(seq, weights, unit_group);
        return out;
    }

    // A is a group: c*A*x_i are A-orbits, so two slices are equal or disjoint. The orbit is
    // (#distinct slices) * prod |A*x_i|, and a slice is identified by its termwise minimum.
    std::set<std::vector<Value>> slices;
    for (Value c : unit_group) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            Value m = n;
            for (Value a : w) m = std::min(m, mul_mod(c, mul_mod(a, seq[i], n), n));
            current[i] = m;
        }
        slices.insert(current);
    }
    std::uint64_t size = slices.size();
    for (Value x : seq.terms()) {
        std::set<Value> image;
        for (Value a : w) image.insert(mul_mod(a, x, n));
        size *= image.size();
    }
    out.orbit_size = size;
    return out;
}

bool are_equivalent(const Seq& a, const Seq& b, const WeightSet& weights) {
    if (a.modulus() != b.modulus() || a.size() != b.size()) return false;
    return canonicalize(a, weights).canonical == canonicalize(b, weights).canonical;
}

Seq apply_equivalence(const Seq& seq, Value c, std::span<const Value> term_weights, const WeightSet& weights) {
    const Value n = seq.modulus();
    require(ZnContext(n).is_unit(c), "apply_equivalence: scale factor must be a unit");
    require(term_weights.size() == seq.size(), "apply_equivalence: one weight per term required");
    std::vector<Value> out(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        require(weights.contains(term_weights[i]), "apply_equivalence: weight not in A");
        out[i] = mul_mod(c, mul_mod(term_weights[i], seq[i], n), n);
    }
    return Seq(n, std::move(out));
}

EquivClass Canonicalizer::operator()(const Seq& seq) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(seq); it != memo_.end()) return it->second;
    }
    EquivClass result = canonicalize(seq, weights_);
    std::unique_lock lock(mutex_);
    memo_.emplace(seq, result);
    return result;
}

std::size_t Canonicalizer::memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

} // namespace zerosum
