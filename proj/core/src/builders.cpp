#include "zerosum/builders.hpp"

#include "zerosum/engine.hpp"
#include "zerosum/error.hpp"

#include <algorithm>
#include <random>

namespace zerosum {

namespace {

void require_prime_divisor(const ZnContext& ctx, Value p) {
    require(is_prime(p) && ctx.divides(p),
            std::to_string(p) + " is not a prime divisor of " + std::to_string(ctx.modulus()));
    if (ctx.modulus() == p)
        fail(ErrorKind::DomainRejected,
             "n = " + std::to_string(p) + " is prime: use a base-case sequence instead of a split");
}

void require_extremal_child(Family family, Value child_n, const Seq& child, std::size_t index) {
    require(child.modulus() == child_n, "child " + std::to_string(index + 1) + " must be a sequence over Z_" +
                                            std::to_string(child_n));
    const ZnContext cctx(child_n);
    const auto constant = formula_constant(family, cctx);
    if (!is_extremal(child, weight_set(family, cctx), constant))
        fail(ErrorKind::NotExtremal, "child " + std::to_string(index + 1) + " " + to_string(child) + " is not " +
                                         to_string(family) + "-extremal in Z_" + std::to_string(child_n));
}

bool coset_pair_mod(Value x, Value y, Value p, unsigned power) {
    const auto weights = WeightSet::units_pow(ZnContext(p), power);
    return coset_test_pair({x % p, p}, {y % p, p}, weights);
}

Seq assemble(Value n, Value p, std::span<const Seq> children, std::span<const Value> connectors) {
    std::vector<Value> terms;
    for (std::size_t i = 0; i < children.size(); ++i) {
        for (Value t : children[i].terms()) terms.push_back(t * p);
        if (i < connectors.size()) terms.push_back(connectors[i]);
    }
    return Seq(n, std::move(terms));
}

Seq build_split(Family family, const ZnContext& ctx, Value p, std::span<const Seq> children,
                std::span<const Value> connectors) {
    require_supported(family, ctx);
    require_prime_divisor(ctx, p);
    const Value n = ctx.modulus();
    const unsigned arity = split_arity(family, p);
    if (children.size() != arity || connectors.size() + 1 != arity)
        fail(ErrorKind::DomainRejected, to_string(family) + " split at p = " + std::to_string(p) + " takes " +
                                            std::to_string(arity) + " children and " + std::to_string(arity - 1) +
                                            " connector(s)");
    for (std::size_t i = 0; i < children.size(); ++i) require_extremal_child(family, n / p, children[i], i);
    for (Value c : connectors) require(c < n, "connector " + std::to_string(c) + " out of range for Z_" + std::to_string(n));

    if (arity == 2) {
        if (connectors[0] % p == 0)
            fail(ErrorKind::DomainRejected,
                 "connector " + std::to_string(connectors[0]) + " is divisible by " + std::to_string(p));
    } else if (!coset_pair_mod(connectors[0], connectors[1], p, unit_power(family))) {
        fail(ErrorKind::DomainRejected, "connectors (" + std::to_string(connectors[0]) + "," +
                                            std::to_string(connectors[1]) + ") reduce to a U(" + std::to_string(p) +
                                            ")^" + std::to_string(unit_power(family)) +
                                            "-weighted zero-sum mod " + std::to_string(p));
    }
    return assemble(n, p, children, connectors);
}

// Base-case extremal sequences over a prime modulus.
void require_leaf(const BuildRecipe& recipe) {
    const ZnContext ctx(recipe.n);
    const Seq leaf(recipe.n, recipe.leaf_terms);
    if (recipe.family == Family::One) {
        if (leaf.size() + 1 != recipe.n || !prefix_sum_free(leaf))
            fail(ErrorKind::NotExtremal, "leaf " + to_string(leaf) + " is not a one-weight extremal sequence");
        return;
    }
    require_supported(recipe.family, ctx);
    if (!ctx.is_prime())
        fail(ErrorKind::DomainRejected, "a " + to_string(recipe.family) + " leaf needs a prime modulus, got " +
                                            std::to_string(recipe.n));
    if (!is_extremal(leaf, weight_set(recipe.family, ctx), formula_constant(recipe.family, ctx)))
        fail(ErrorKind::NotExtremal, "leaf " + to_string(leaf) + " is not " + to_string(recipe.family) +
                                         "-extremal in Z_" + std::to_string(recipe.n));
}

std::vector<Value> least_pair(Value p, unsigned power) {
    for (Value y = 1; y < p; ++y)
        if (coset_pair_mod(1, y, p, power)) return {1, y};
    fail(ErrorKind::Internal, "no coset pair mod " + std::to_string(p));
}

std::vector<Value> random_pair(Value p, unsigned power, std::mt19937_64& rng) {
    std::uniform_int_distribution<Value> unit(1, p - 1);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const Value x = unit(rng), y = unit(rng);
        if (coset_pair_mod(x, y, p, power)) return {x, y};
    }
    fail(ErrorKind::Internal, "no coset pair found mod " + std::to_string(p));
}

Value lift_random(Value image, Value p, Value n, std::mt19937_64& rng) {
    std::uniform_int_distribution<Value> k(0, n / p - 1);
    return image + p * k(rng);
}

BuildRecipe make_recipe(Family family, const ZnContext& ctx, std::mt19937_64* rng) {
    const Value n = ctx.modulus();
    BuildRecipe r;
    r.family = family;
    r.n = n;

    if (family == Family::One) {
        OneWeightSelector pick;
        if (rng != nullptr)
            pick = [rng](std::size_t, std::span<const Value>, std::span<const Value> legal) {
                std::uniform_int_distribution<std::size_t> d(0, legal.size() - 1);
                return legal[d(*rng)];
            };
        const auto seq = build_one_weight(ctx, pick);
        r.leaf_terms.assign(seq.terms().begin(), seq.terms().end());
        return r;
    }

    require_supported(family, ctx);
    const unsigned power = unit_power(family);
    if (ctx.is_prime()) {
        const Value p = n;
        const bool pair = n != 2 && split_arity(family, p) == 3;
        if (pair) {
            r.leaf_terms = rng != nullptr ? random_pair(p, power, *rng) : least_pair(p, power);
        } else {
            r.leaf_terms = {rng != nullptr ? std::uniform_int_distribution<Value>(1, p - 1)(*rng) : Value{1}};
        }
        return r;
    }

    const auto primes = ctx.prime_divisors();
    Value p = primes.front();
    if (rng != nullptr) p = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(*rng)];
    r.prime = p;
    const unsigned arity = split_arity(family, p);
    const ZnContext child_ctx(n / p);
    for (unsigned i = 0; i < arity; ++i) {
        if (rng == nullptr && i > 0)
            r.children.push_back(r.children.front());
        else
            r.children.push_back(make_recipe(family, child_ctx, rng));
    }
    if (arity == 2) {
        if (rng == nullptr) {
            r.connectors = {1};
        } else {
            const Value image = std::uniform_int_distribution<Value>(1, p - 1)(*rng);
            r.connectors = {lift_random(image, p, n, *rng)};
        }
    } else {
        if (rng == nullptr) {
            r.connectors = least_pair(p, power);
        } else {
            const auto images = random_pair(p, power, *rng);
            r.connectors = {lift_random(images[0], p, n, *rng), lift_random(images[1], p, n, *rng)};
        }
    }
    return r;
}

} // namespace

Seq build_one_weight(const ZnContext& ctx, const OneWeightSelector& select) {
    const Value n = ctx.modulus();
    std::vector<Value> terms;
    // prefix_sums[s] is the index of the prefix sum equal to s, or -1.
    std::vector<long> prefix_index(n, -1);
    prefix_index[0] = 0;
    Value sum = 0;
    std::vector<Value> legal;
    for (std::size_t step = 0; step + 1 < n; ++step) {
        legal.clear();
        for (Value x = 1; x < n; ++x)
            if (prefix_index[add_mod(sum, x, n)] < 0) legal.push_back(x);
        Value x = legal.front();
        if (select) {
            x = select(step, terms, legal);
            require(x < n, "selected term " + std::to_string(x) + " out of range for Z_" + std::to_string(n));
            if (x == 0)
                fail(ErrorKind::DomainRejected, "term " + std::to_string(step + 1) + " = 0 is itself a zero-sum window");
            const long clash = prefix_index[add_mod(sum, x, n)];
            if (clash >= 0)
                fail(ErrorKind::DomainRejected, "term " + std::to_string(step + 1) + " = " + std::to_string(x) +
                                                    " repeats prefix sum " + std::to_string(add_mod(sum, x, n)) +
                                                    ": terms " + std::to_string(clash + 1) + ".." +
                                                    std::to_string(step + 1) + " sum to 0");
        }
        terms.push_back(x);
        sum = add_mod(sum, x, n);
        prefix_index[sum] = static_cast<long>(step + 1);
    }
    return Seq(n, std::move(terms));
}

Seq build_units(const ZnContext& ctx, Value p, const Seq& first, const Seq& second, Value connector) {
    const Seq children[] = {first, second};
    const Value connectors[] = {connector};
    return build_split(Family::Units, ctx, p, children, connectors);
}

Seq build_units_squared(const ZnContext& ctx, Value p, const Seq& first, const Seq& second, const Seq& third,
                        Value connector1, Value connector2) {
    const Seq children[] = {first, second, third};
    const Value connectors[] = {connector1, connector2};
    return build_split(Family::UnitsSquared, ctx, p, children, connectors);
}

Seq build_units_cubed(const ZnContext& ctx, Value p, std::span<const Seq> children, std::span<const Value> connectors) {
    return build_split(Family::UnitsCubed, ctx, p, children, connectors);
}

Seq build(const BuildRecipe& recipe) {
    const ZnContext ctx(recipe.n);
    if (recipe.is_leaf()) {
        require(recipe.children.empty() && recipe.connectors.empty(), "a leaf recipe has no children or connectors");
        require_leaf(recipe);
        return Seq(recipe.n, recipe.leaf_terms);
    }
    require(recipe.family != Family::One, "the one-weight family is built as a leaf");
    require(recipe.leaf_terms.empty(), "a split recipe carries no leaf terms");
    require_prime_divisor(ctx, recipe.prime);
    std::vector<Seq> children;
    for (const auto& child : recipe.children) {
        require(child.family == recipe.family, "child recipe family differs from its parent");
        require(child.n * recipe.prime == recipe.n, "child recipe modulus must be n/p");
        children.push_back(build(child));
    }
    return build_split(recipe.family, ctx, recipe.prime, children, recipe.connectors);
}

BuildRecipe default_recipe(Family family, const ZnContext& ctx) { return make_recipe(family, ctx, nullptr); }

BuildRecipe random_recipe(Family family, const ZnContext& ctx, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return make_recipe(family, ctx, &rng);
}

Seq random_extremal(Family family, const ZnContext& ctx, std::uint64_t seed) {
    Seq out = build(random_recipe(family, ctx, seed));
    const auto weights = weight_set(family, ctx);
    if (!is_extremal(out, weights, formula_constant(family, ctx)))
        fail(ErrorKind::Internal, "built sequence " + to_string(out) + " is not extremal");
    return out;
}

} // namespace zerosum
