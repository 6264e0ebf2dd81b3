// Randomized and exhaustive checks of the algebraic invariants. Every random stream is seeded.
#include "zerosum/builders.hpp"
#include "zerosum/canonical.hpp"
#include "zerosum/decompose.hpp"
#include "zerosum/engine.hpp"
#include "zerosum/error.hpp"
#include "zerosum/family.hpp"
#include "zerosum/search.hpp"
#include "zerosum/shape.hpp"

#include "naive_oracle.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace zerosum;

namespace {

using Rng = std::mt19937_64;

Value uniform(Rng& rng, Value lo, Value hi) { return std::uniform_int_distribution<Value>(lo, hi)(rng); }

Seq random_seq(Rng& rng, Value n, std::size_t length) {
    std::vector<Value> t(length);
    for (auto& x : t) x = uniform(rng, 0, n - 1);
    return Seq(n, std::move(t));
}

naive::Terms terms_of(const Seq& s) { return {s.terms().begin(), s.terms().end()}; }
std::vector<Value> values_of(const WeightSet& w) { return {w.values().begin(), w.values().end()}; }

Value naive_gcd(Value a, Value b) { return b == 0 ? a : naive_gcd(b, a % b); }

/// A sequence over Z_n with at least `units_needed` terms coprime to p.
Seq seq_with_coprime_terms(Rng& rng, Value n, Value p, std::size_t units_needed, std::size_t max_extra) {
    std::vector<Value> t;
    const std::size_t extra = uniform(rng, 0, static_cast<Value>(max_extra));
    for (std::size_t i = 0; i < units_needed + extra; ++i) {
        Value x = uniform(rng, 0, n - 1);
        if (i < units_needed)
            while (x % p == 0) x = uniform(rng, 1, n - 1);
        t.push_back(x);
    }
    std::shuffle(t.begin(), t.end(), rng);
    return Seq(n, std::move(t));
}

std::vector<Value> legal_moduli(Family family, Value max_n) {
    std::vector<Value> out;
    for (Value n = 2; n <= max_n; ++n)
        if (family_supported(family, ZnContext(n))) out.push_back(n);
    return out;
}

struct Skeleton {
    Value prime;
    std::vector<std::size_t> middles;
    std::vector<Skeleton> children;
    friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

Skeleton skeleton(const Certificate& c) {
    Skeleton s{c.prime, c.middle_positions, {}};
    for (const auto& child : c.children) s.children.push_back(skeleton(child));
    return s;
}

} // namespace

// ---- ring core ----

TEST(RingProperties, UnitsClosedAndCountedByPhi) {
    for (Value n = 2; n <= 300; ++n) {
        const ZnContext ctx(n);
        const auto u = units(ctx);
        Value coprime = 0;
        for (Value x = 1; x < n; ++x) coprime += naive_gcd(x, n) == 1;
        ASSERT_EQ(u.size(), coprime) << n;
        ASSERT_EQ(ctx.euler_phi(), coprime) << n;
        ASSERT_EQ(u.front(), n == 1 ? 0u : 1u);
        const std::set<Value> set(u.begin(), u.end());
        for (Value a : u)
            for (Value b : u) ASSERT_TRUE(set.count(mul_mod(a, b, n))) << n;
    }
}

TEST(RingProperties, UnitPowersHaveExpectedIndexAtPrimes) {
    for (Value p = 3; p <= 97; ++p) {
        const ZnContext ctx(p);
        if (!ctx.is_prime()) continue;
        const auto u = units(ctx);
        for (unsigned j : {2u, 3u}) {
            const auto pw = unit_powers(ctx, j);
            for (Value x : pw) EXPECT_TRUE(std::binary_search(u.begin(), u.end(), x));
            EXPECT_EQ(pw.size() * std::gcd<Value>(j, p - 1), p - 1) << p << " " << j;
        }
    }
    for (Value n = 2; n <= 200; ++n) {
        const ZnContext ctx(n);
        const auto u = units(ctx);
        for (unsigned j : {2u, 3u})
            for (Value x : unit_powers(ctx, j)) ASSERT_TRUE(std::binary_search(u.begin(), u.end(), x));
    }
}

TEST(RingProperties, NaturalMapIsRingHomomorphism) {
    Rng rng(11);
    for (Value n : {12u, 30u, 75u, 105u, 210u, 343u}) {
        for (Value m = 2; m <= n; ++m) {
            if (n % m != 0) continue;
            for (int i = 0; i < 1000; ++i) {
                const Value x = uniform(rng, 0, n - 1), y = uniform(rng, 0, n - 1);
                const auto map = [&](Value v) { return natural_map(Residue::of(v, n), m).value; };
                ASSERT_EQ(map(add_mod(x, y, n)), add_mod(map(x), map(y), m));
                ASSERT_EQ(map(mul_mod(x, y, n)), mul_mod(map(x), map(y), m));
            }
        }
    }
}

TEST(RingProperties, LiftThenReduceIsIdentity) {
    for (Value n = 2; n <= 200; ++n) {
        const ZnContext ctx(n);
        for (Value m = 2; m <= n; ++m) {
            if (n % m != 0) continue;
            const ZnContext small(m);
            for (Value b : units(small)) {
                const auto a = lift_unit(Residue::of(b, m), ctx);
                ASSERT_TRUE(ctx.is_unit(a.value));
                ASSERT_EQ(a.value % m, b) << n << " " << m;
            }
            const auto n_squares = unit_powers(ctx, 2);
            for (Value b : unit_powers(small, 2)) {
                const auto a = lift_unit(Residue::of(b, m), ctx, LiftKind::UnitSquare);
                ASSERT_TRUE(std::binary_search(n_squares.begin(), n_squares.end(), a.value));
                ASSERT_EQ(a.value % m, b);
            }
        }
    }
}

TEST(RingProperties, SquaresOfUnitsSurjectOntoQuotientSquares) {
    for (Value n = 2; n <= 200; ++n) {
        const ZnContext ctx(n);
        for (Value m = 2; m < n; ++m) {
            if (n % m != 0) continue;
            std::set<Value> image;
            for (Value a : unit_powers(ctx, 2)) image.insert(a % m);
            const auto target = unit_powers(ZnContext(m), 2);
            ASSERT_EQ(std::vector<Value>(image.begin(), image.end()), target) << n << " -> " << m;
        }
    }
}

TEST(RingProperties, CosetTestAgreesWithEngine) {
    for (Value p = 3; p <= 31; ++p) {
        const ZnContext ctx(p);
        if (!ctx.is_prime()) continue;
        for (unsigned j : {2u, 3u}) {
            const auto w = WeightSet::units_pow(ctx, j);
            for (Value x = 1; x < p; ++x)
                for (Value y = 1; y < p; ++y)
                    ASSERT_EQ(coset_test_pair(Residue::of(x, p), Residue::of(y, p), w),
                              !has_zero_window(Seq(p, {x, y}), w).has_value())
                        << p << " " << j << " (" << x << "," << y << ")";
        }
    }
}

TEST(RingProperties, CubeSplitFactorsCorrectly) {
    for (Value n = 2; n <= 1000; ++n) {
        const ZnContext ctx(n);
        if (!ctx.is_squarefree()) continue;
        const auto s = cube_split(ctx);
        ASSERT_EQ(s.n1 * s.n2, n);
        for (Value p : ctx.prime_divisors()) ASSERT_EQ(s.n1 % p == 0, p % 3 == 1) << n << " " << p;
    }
}

// ---- zero-window engine ----

TEST(EngineProperties, AgreesWithNaiveOracle) {
    Rng rng(2024);
    for (Value n = 2; n <= 12; ++n) {
        std::vector<WeightSet> sets = {WeightSet::one(n), WeightSet::units_pow(ZnContext(n), 1),
                                       WeightSet::units_pow(ZnContext(n), 2)};
        for (int k = 0; k < 4; ++k) {
            std::set<Value> chosen;
            const std::size_t size = std::min<Value>(uniform(rng, 1, 4), n - 1);
            while (chosen.size() < size) chosen.insert(uniform(rng, 1, n - 1));
            sets.push_back(WeightSet::explicit_set(n, std::vector<Value>(chosen.begin(), chosen.end())));
        }
        for (const auto& w : sets) {
            const auto wv = values_of(w);
            if (wv.size() > 4) continue;
            const auto check = [&](const naive::Terms& t) {
                const Seq s(n, std::vector<Value>(t.begin(), t.end()));
                ASSERT_EQ(!has_zero_window(s, w).has_value(), naive::zero_window_free(t, n, wv))
                    << n << " " << w.describe() << " " << to_string(s);
                ASSERT_EQ(is_weighted_zero_sum(s, w), naive::zero_sum(t, n, wv));
            };
            for (std::size_t len = 1; len <= 3; ++len) naive::for_each_sequence(n, len, check);
            for (int i = 0; i < 300; ++i) check(terms_of(random_seq(rng, n, uniform(rng, 4, 5))));
        }
    }
}

TEST(EngineProperties, ConstantMatchesOracleOnRandomWeightSets) {
    Rng rng(5);
    for (Value n = 3; n <= 6; ++n) {
        for (int k = 0; k < 4; ++k) {
            std::set<Value> chosen;
            const std::size_t size = uniform(rng, 1, std::min<Value>(3, n - 1));
            while (chosen.size() < size) chosen.insert(uniform(rng, 1, n - 1));
            const std::vector<Value> wv(chosen.begin(), chosen.end());
            const auto r = compute_constant(ZnContext(n), WeightSet::explicit_set(n, wv));
            ASSERT_EQ(r.status, SearchStatus::Exact);
            EXPECT_EQ(r.constant, naive::constant(n, wv, n)) << n;
        }
    }
}

TEST(EngineProperties, ZeroWindowsPersistUnderExtension) {
    Rng rng(3);
    for (int i = 0; i < 3000; ++i) {
        const Value n = uniform(rng, 2, 60);
        const auto w = WeightSet::units_pow(ZnContext(n), uniform(rng, 1, 3));
        const Seq s = random_seq(rng, n, uniform(rng, 1, 6));
        if (!has_zero_window(s, w)) continue;
        std::vector<Value> t(s.terms().begin(), s.terms().end());
        t.push_back(uniform(rng, 0, n - 1));
        ASSERT_TRUE(has_zero_window(Seq(n, t), w).has_value());
    }
}

TEST(EngineProperties, PrefixSumFreeIffNoOneWeightedZeroWindow) {
    for (Value n = 2; n <= 8; ++n) {
        const auto one = WeightSet::one(n);
        for (std::size_t len = 1; len <= n - 1; ++len)
            naive::for_each_sequence(n, len, [&](const naive::Terms& t) {
                const Seq s(n, std::vector<Value>(t.begin(), t.end()));
                ASSERT_EQ(prefix_sum_free(s), !has_zero_window(s, one).has_value()) << to_string(s);
            });
    }
}

TEST(EngineProperties, CrtCheckAgreesWithDirectReach) {
    Rng rng(17);
    for (Value n : {15u, 21u, 35u, 45u, 95u, 105u})
        for (unsigned j : {1u, 2u, 3u}) {
            const auto w = WeightSet::units_pow(ZnContext(n), j);
            for (int i = 0; i < 1000; ++i) {
                const Seq s = random_seq(rng, n, uniform(rng, 1, 5));
                ASSERT_EQ(crt_zero_sum_check(s, j), is_weighted_zero_sum(s, w)) << n << " " << j << " " << to_string(s);
            }
        }
}

TEST(EngineProperties, TwoCoprimeTermsForceUnitZeroSumAtOddPrimePowers) {
    Rng rng(19);
    for (Value q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u}) {
        const Value p = ZnContext(q).prime_divisors().front();
        const auto w = WeightSet::units_pow(ZnContext(q), 1);
        for (int i = 0; i < 500; ++i)
            ASSERT_TRUE(is_weighted_zero_sum(seq_with_coprime_terms(rng, q, p, 2, 3), w)) << q;
    }
}

TEST(EngineProperties, ThreeUnitsForceSquareZeroSum) {
    Rng rng(23);
    for (Value q : {7u, 49u, 11u, 121u, 13u, 169u}) {
        const Value p = ZnContext(q).prime_divisors().front();
        const auto w = WeightSet::units_pow(ZnContext(q), 2);
        for (int i = 0; i < 500; ++i)
            ASSERT_TRUE(is_weighted_zero_sum(seq_with_coprime_terms(rng, q, p, 3, 3), w)) << q;
    }
    // Two units do not suffice, and three fail at 5.
    EXPECT_FALSE(is_weighted_zero_sum(Seq(7, {1, 1}), WeightSet::units_pow(ZnContext(7), 2)));
    EXPECT_FALSE(is_weighted_zero_sum(Seq(5, {1, 1, 1}), WeightSet::units_pow(ZnContext(5), 2)));
}

TEST(EngineProperties, ThreeUnitsForceCubeZeroSumExceptAt2_7_13) {
    Rng rng(29);
    for (Value p : {3u, 5u, 11u, 17u, 19u, 23u, 29u, 31u}) {
        const auto w = WeightSet::units_pow(ZnContext(p), 3);
        for (int i = 0; i < 500; ++i)
            ASSERT_TRUE(is_weighted_zero_sum(seq_with_coprime_terms(rng, p, p, 3, 0), w)) << p;
    }
    for (Value p : {2u, 7u, 13u})
        EXPECT_FALSE(is_weighted_zero_sum(Seq(p, {1, 1, 1}), WeightSet::units_pow(ZnContext(p), 3))) << p;
}

TEST(EngineProperties, TripleUnitCoverForSquares) {
    for (Value p : {7u, 11u, 13u}) {
        const ZnContext ctx(p);
        for (Value a = 1; a < p; ++a)
            for (Value b = 1; b < p; ++b)
                for (Value c = 1; c < p; ++c) ASSERT_TRUE(triple_unit_cover(ctx, a, b, c)) << p;
    }
}

TEST(EngineProperties, QuotientZeroSumLiftsThroughPrime) {
    Rng rng(31);
    struct Case {
        Value n;
        unsigned j;
    };
    for (const auto& c : std::vector<Case>{{25, 1}, {45, 1}, {105, 1}, {49, 2}, {77, 2}, {121, 2}, {55, 3}, {95, 3}}) {
        const auto primes = ZnContext(c.n).prime_divisors();
        for (int i = 0; i < 500; ++i) {
            const Value p = primes[uniform(rng, 0, static_cast<Value>(primes.size() - 1))];
            std::vector<Value> t(uniform(rng, 1, 5));
            for (auto& x : t) x = p * uniform(rng, 0, c.n / p - 1);
            const auto lift = lift_zero_sum_by_prime(Seq(c.n, t), p, c.j);
            ASSERT_TRUE(lift.holds()) << c.n << " " << p;
        }
    }
}

// ---- constants ----

TEST(ConstantProperties, ClosedFormsAgreeWithSearch) {
    const auto exact = [](Value n, const WeightSet& w) {
        const auto r = compute_constant(ZnContext(n), w);
        EXPECT_EQ(r.status, SearchStatus::Exact);
        return r.constant;
    };
    for (Value n = 2; n <= 50; ++n) EXPECT_EQ(exact(n, WeightSet::all_nonzero(n)), 2u) << n;
    EXPECT_EQ(exact(2, WeightSet::units_pow(ZnContext(2), 2)), 2u);
    for (Value p = 3; p <= 31; ++p)
        if (ZnContext(p).is_prime()) EXPECT_EQ(exact(p, WeightSet::units_pow(ZnContext(p), 2)), 3u) << p;
    for (Value n : {9u, 15u, 21u, 25u, 33u, 35u, 49u})
        EXPECT_EQ(exact(n, WeightSet::units_pow(ZnContext(n), 1)), formula_constant(Family::Units, ZnContext(n)));
    for (Value n : {7u, 11u, 13u, 49u, 77u})
        EXPECT_EQ(exact(n, WeightSet::units_pow(ZnContext(n), 2)),
                  formula_constant(Family::UnitsSquared, ZnContext(n)));
    for (Value n : {5u, 19u, 55u, 95u})
        EXPECT_EQ(exact(n, WeightSet::units_pow(ZnContext(n), 3)), formula_constant(Family::UnitsCubed, ZnContext(n)));
    EXPECT_EQ(exact(7, WeightSet::units_pow(ZnContext(7), 3)), 4u);
}

TEST(ConstantProperties, OneWeightExtremalCountIsFactorial) {
    std::uint64_t factorial = 1;
    for (Value n = 2; n <= 8; ++n) {
        EnumerateOptions o;
        o.count_only = true;
        EXPECT_EQ(enumerate_extremal(ZnContext(n), WeightSet::one(n), n, o).count, factorial) << n;
        factorial *= n;
    }
}

// ---- builders and decomposer ----

class FamilyProperties : public ::testing::TestWithParam<Family> {};

TEST_P(FamilyProperties, RandomRecipesBuildExtremalSequences) {
    const Family family = GetParam();
    const auto moduli = legal_moduli(family, 105);
    ASSERT_FALSE(moduli.empty());
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ZnContext ctx(moduli[seed % moduli.size()]);
        const auto recipe = random_recipe(family, ctx, seed);
        const Seq s = build(recipe);
        const auto constant = formula_constant(family, ctx);
        ASSERT_EQ(s.size(), constant - 1) << to_string(recipe);
        ASSERT_TRUE(is_extremal(s, weight_set(family, ctx), constant)) << to_string(recipe);
        ASSERT_EQ(parse_recipe(to_string(recipe)), recipe);
    }
}

TEST_P(FamilyProperties, DecomposeRoundTripKeepsSkeleton) {
    const Family family = GetParam();
    const auto moduli = legal_moduli(family, 105);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ZnContext ctx(moduli[(seed * 7) % moduli.size()]);
        const Seq s = random_extremal(family, ctx, seed);
        const auto cert = decompose(s, family, ctx);
        ASSERT_TRUE(check_certificate(cert).ok) << check_certificate(cert).reason;
        const Seq rebuilt = build(to_recipe(cert));
        ASSERT_EQ(rebuilt, s);
        ASSERT_EQ(skeleton(decompose(rebuilt, family, ctx)), skeleton(cert));
        if (shape_applies(family, ctx)) ASSERT_NO_THROW((void)validate_shape(s, family, ctx)) << to_string(s);
    }
}

TEST_P(FamilyProperties, EquivalencePreservesExtremality) {
    const Family family = GetParam();
    const auto moduli = legal_moduli(family, 105);
    Rng rng(37);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ZnContext ctx(moduli[(seed * 3) % moduli.size()]);
        const auto w = weight_set(family, ctx);
        if (!w.is_unit_subgroup()) continue;
        const Seq s = random_extremal(family, ctx, seed);
        const auto u = units(ctx);
        const auto wv = values_of(w);
        std::vector<Value> per_term(s.size());
        for (auto& a : per_term) a = wv[uniform(rng, 0, static_cast<Value>(wv.size() - 1))];
        const Seq t = apply_equivalence(s, u[uniform(rng, 0, static_cast<Value>(u.size() - 1))], per_term, w);
        ASSERT_TRUE(is_extremal(t, w, formula_constant(family, ctx))) << to_string(s) << " -> " << to_string(t);
        ASSERT_EQ(canonicalize(s, w), canonicalize(t, w));
    }
}

INSTANTIATE_TEST_SUITE_P(AllFamilies, FamilyProperties,
                         ::testing::Values(Family::One, Family::Units, Family::UnitsSquared, Family::UnitsCubed),
                         [](const auto& info) {
                             switch (info.param) {
                             case Family::One: return std::string("One");
                             case Family::Units: return std::string("Units");
                             case Family::UnitsSquared: return std::string("UnitsSquared");
                             default: return std::string("UnitsCubed");
                             }
                         });

TEST(DecomposeProperties, EveryUnitsExtremalDecomposes) {
    // Full streams where they are small; one representative per orbit for three prime factors.
    for (Value n : {9u, 15u, 21u, 25u, 27u, 45u, 75u}) {
        const ZnContext ctx(n);
        const auto w = WeightSet::units_pow(ctx, 1);
        const auto stream = ctx.omega() < 3 ? for_each_zero_window_free : for_each_reduced_zero_window_free;
        std::uint64_t seen = 0;
        stream(ctx, w, formula_constant(Family::Units, ctx) - 1, [&](std::span<const Value> t) {
            const Seq s(n, std::vector<Value>(t.begin(), t.end()));
            const auto cert = decompose(s, Family::Units, ctx);
            EXPECT_TRUE(check_certificate(cert).ok);
            EXPECT_NO_THROW((void)validate_shape(s, Family::Units, ctx));
            ++seen;
            return !HasFailure();
        }, {});
        EXPECT_GT(seen, 0u) << n;
    }
}

TEST(DecomposeProperties, SquaresPrimeIsUniqueByCoprimeCounts) {
    for (Value n : {49u, 77u, 91u}) {
        const ZnContext ctx(n);
        const auto w = WeightSet::units_pow(ctx, 2);
        std::uint64_t seen = 0;
        for_each_reduced_zero_window_free(ctx, w, formula_constant(Family::UnitsSquared, ctx) - 1,
                                          [&](std::span<const Value> t) {
                                              const Seq s(n, std::vector<Value>(t.begin(), t.end()));
                                              const auto counts = coprime_term_counts(s);
                                              std::size_t exactly_two = 0;
                                              for (const auto& c : counts) {
                                                  exactly_two += c.coprime_terms == 2;
                                                  EXPECT_TRUE(c.coprime_terms == 2 || c.coprime_terms >= 3);
                                              }
                                              EXPECT_EQ(exactly_two, 1u) << to_string(s);
                                              const auto cert = decompose(s, Family::UnitsSquared, ctx);
                                              EXPECT_TRUE(cert.alternate_primes.empty());
                                              ++seen;
                                              return !HasFailure();
                                          });
        EXPECT_GT(seen, 0u) << n;
    }
}

TEST(DecomposeProperties, EveryCubesExtremalOver55Decomposes) {
    const ZnContext ctx(55);
    const auto w = WeightSet::units_pow(ctx, 3);
    std::uint64_t seen = 0;
    for_each_zero_window_free(ctx, w, 3, [&](std::span<const Value> t) {
        const Seq s(55, std::vector<Value>(t.begin(), t.end()));
        EXPECT_TRUE(check_certificate(decompose(s, Family::UnitsCubed, ctx)).ok);
        ++seen;
        return !HasFailure();
    });
    EXPECT_EQ(seen, 5200u);
}

// ---- canonical forms ----

TEST(CanonicalProperties, IdempotentAndOrbitSizeDivides) {
    Rng rng(41);
    for (int i = 0; i < 400; ++i) {
        const Value n = uniform(rng, 2, 40);
        const ZnContext ctx(n);
        const auto w = WeightSet::units_pow(ctx, uniform(rng, 1, 3));
        const Seq s = random_seq(rng, n, uniform(rng, 1, 4));
        const auto c = canonicalize(s, w);
        ASSERT_EQ(canonicalize(c.canonical, w), c);
        ASSERT_LE(c.canonical, s);
        std::uint64_t group = units(ctx).size();
        for (std::size_t k = 0; k < s.size(); ++k) group *= w.size();
        ASSERT_EQ(group % c.orbit_size, 0u) << n << " " << to_string(s);
    }
}

TEST(CanonicalProperties, EveryCubesExtremalOver7IsEquivalentTo131) {
    const ZnContext ctx(7);
    const auto w = WeightSet::units_pow(ctx, 3);
    const auto e = enumerate_extremal(ctx, w, 4);
    ASSERT_EQ(e.count, 24u);
    for (const Seq& s : e.sequences) EXPECT_EQ(canonicalize(s, w).canonical, Seq(7, {1, 3, 1}));
}

TEST(BuilderProperties, OneWeightSelectorsAlwaysGiveDistinctPrefixSums) {
    Rng rng(43);
    for (int i = 0; i < 300; ++i) {
        const Value n = uniform(rng, 2, 60);
        const Seq s = build_one_weight(ZnContext(n), [&](std::size_t, std::span<const Value>, std::span<const Value> legal) {
            return legal[uniform(rng, 0, static_cast<Value>(legal.size() - 1))];
        });
        ASSERT_EQ(s.size(), n - 1);
        ASSERT_TRUE(prefix_sum_free(s));
    }
}
