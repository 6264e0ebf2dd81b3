#pragma once

// Constructive generators for extremal sequences, one per characterized weight family.

#include "zerosum/family.hpp"
#include "zerosum/sequence.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace zerosum {

/// A reproducible build. A leaf (prime == 0) holds a base-case sequence verbatim; a split
/// holds the structural prime p, the children over Z_{n/p} and the connector terms placed
/// between the scaled children.
struct BuildRecipe {
    Family family = Family::Units;
    Value n = 0;
    Value prime = 0;
    std::vector<Value> connectors;
    std::vector<BuildRecipe> children;
    std::vector<Value> leaf_terms;

    [[nodiscard]] bool is_leaf() const noexcept { return prime == 0; }
    friend bool operator==(const BuildRecipe&, const BuildRecipe&) = default;
};

/// Chooses x_{step+1} given the prefix and the residues that keep all prefix sums distinct.
using OneWeightSelector = std::function<Value(std::size_t step, std::span<const Value> prefix,
                                              std::span<const Value> legal)>;

/// Length n-1 sequence with pairwise distinct prefix sums. Without a selector the least legal
/// residue is taken at every step.
[[nodiscard]] Seq build_one_weight(const ZnContext& ctx, const OneWeightSelector& select = {});

/// (p*u_1..p*u_k, x*, p*v_1..p*v_k) for U(n)-extremal children over Z_{n/p}, n odd.
[[nodiscard]] Seq build_units(const ZnContext& ctx, Value p, const Seq& first, const Seq& second, Value connector);

/// (p*u, x*, p*v, x**, p*w) for U(n/p)^2-extremal children; (x*, x**) mod p must have no
/// Q_p-weighted zero-sum subsequence. Every prime divisor of n must be at least 7.
[[nodiscard]] Seq build_units_squared(const ZnContext& ctx, Value p, const Seq& first, const Seq& second,
                                      const Seq& third, Value connector1, Value connector2);

/// n squarefree and coprime to 2*7*13. For p = 1 (mod 3): three children and two connectors
/// whose image mod p has no U(p)^3-weighted zero-sum subsequence; otherwise two children and
/// one connector not divisible by p.
[[nodiscard]] Seq build_units_cubed(const ZnContext& ctx, Value p, std::span<const Seq> children,
                                    std::span<const Value> connectors);

/// Builds and validates every level of the recipe.
[[nodiscard]] Seq build(const BuildRecipe& recipe);

/// Deterministic recipe: smallest prime at every level, least valid connectors and leaves.
[[nodiscard]] BuildRecipe default_recipe(Family family, const ZnContext& ctx);

/// Uniformly random prime choices, connectors and base cases.
[[nodiscard]] BuildRecipe random_recipe(Family family, const ZnContext& ctx, std::uint64_t seed);

[[nodiscard]] Seq random_extremal(Family family, const ZnContext& ctx, std::uint64_t seed);

/// Textual form, e.g. (split units 25 5 [4] (leaf units 5 [2]) (leaf units 5 [4]))
[[nodiscard]] std::string to_string(const BuildRecipe& recipe);
[[nodiscard]] BuildRecipe parse_recipe(std::string_view text);

} // namespace zerosum
