#include "zerosum/cli/theorem_suite.hpp"

#include "zerosum/builders.hpp"
#include "zerosum/canonical.hpp"
#include "zerosum/decompose.hpp"
#include "zerosum/engine.hpp"
#include "zerosum/error.hpp"
#include "zerosum/family.hpp"
#include "zerosum/shape.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

namespace zerosum::cli {

namespace {

struct Skip {
    std::string why;
};
struct Failure {
    std::string what;
};

/// Per-statement state: case counter, deadline, deterministic randomness.
class Probe {
public:
    Probe(Value scope, SearchBudget budget)
        : scope(scope), budget(budget), start_(std::chrono::steady_clock::now()) {}

    void tick() {
        ++cases;
        if (budget.max_time.count() > 0 && std::chrono::steady_clock::now() - start_ > budget.max_time)
            throw Skip{"time budget exhausted after " + std::to_string(cases) + " cases"};
    }
    void expect(bool ok, const std::string& what) {
        tick();
        if (!ok) throw Failure{what};
    }
    SearchReport search(const ZnContext& ctx, const WeightSet& w) {
        auto r = compute_constant(ctx, w, budget);
        if (r.status != SearchStatus::Exact)
            throw Skip{"search budget exhausted at n = " + std::to_string(ctx.modulus())};
        return r;
    }
    std::vector<Value> moduli(Value from, Value cap, const std::function<bool(const ZnContext&)>& keep) const {
        std::vector<Value> out;
        for (Value n = from; n <= std::min(scope, cap); ++n)
            if (keep(ZnContext(n))) out.push_back(n);
        return out;
    }
    void stream(const ZnContext& ctx, const WeightSet& w, std::size_t length, const SequenceVisitor& visit,
                bool reduced = false) {
        const bool done = reduced ? for_each_reduced_zero_window_free(ctx, w, length, visit, budget)
                                  : for_each_zero_window_free(ctx, w, length, visit, budget);
        if (!done) throw Skip{"enumeration budget exhausted at n = " + std::to_string(ctx.modulus())};
    }

    Value scope;
    SearchBudget budget;
    std::uint64_t cases = 0;
    std::mt19937_64 rng{0x5eed};

private:
    std::chrono::steady_clock::time_point start_;
};

struct Statement {
    std::string name;
    Value min_n;
    std::function<void(Probe&)> run;
};

constexpr Value unlimited = 1u << 30;

bool odd(const ZnContext& c) { return c.modulus() % 2 != 0; }
bool odd_prime_power(const ZnContext& c) { return odd(c) && c.is_prime_power(); }

Seq random_seq(Probe& probe, Value n, std::size_t length) {
    std::uniform_int_distribution<Value> d(0, n - 1);
    std::vector<Value> t(length);
    for (auto& x : t) x = d(probe.rng);
    return Seq(n, std::move(t));
}

Value random_unit(Probe& probe, const ZnContext& ctx) {
    std::uniform_int_distribution<Value> d(1, ctx.modulus() - 1);
    for (;;)
        if (Value x = d(probe.rng); ctx.is_unit(x)) return x;
}

void formula_matches_search(Probe& probe, Family family, Value cap) {
    for (Value n : probe.moduli(2, cap, [family](const ZnContext& c) { return family_supported(family, c); })) {
        const ZnContext ctx(n);
        const auto expected = formula_constant(family, ctx);
        const auto found = probe.search(ctx, weight_set(family, ctx)).constant;
        probe.expect(found == expected, "n = " + std::to_string(n) + ": search " + std::to_string(found) +
                                            ", formula " + std::to_string(expected));
    }
}

void round_trip(Probe& probe, Family family, Value cap, int per_modulus) {
    for (Value n : probe.moduli(2, cap, [family](const ZnContext& c) { return family_supported(family, c); })) {
        const ZnContext ctx(n);
        for (int i = 0; i < per_modulus; ++i) {
            const auto recipe = random_recipe(family, ctx, probe.rng());
            const Seq built = build(recipe);
            const auto cert = decompose(built, family, ctx);
            const auto check = check_certificate(cert);
            probe.expect(check.ok, to_string(built) + ": " + check.reason);
            const auto again = decompose(build(to_recipe(cert)), family, ctx);
            probe.expect(again.prime == cert.prime && again.middle_positions == cert.middle_positions,
                         to_string(built) + ": rebuilt skeleton differs");
        }
    }
}

void completeness(Probe& probe, Family family, Value cap) {
    for (Value n : probe.moduli(2, cap, [family](const ZnContext& c) { return family_supported(family, c); })) {
        const ZnContext ctx(n);
        const auto w = weight_set(family, ctx);
        const bool shaped = shape_applies(family, ctx);
        probe.stream(ctx, w, formula_constant(family, ctx) - 1, [&](std::span<const Value> terms) {
            const Seq s(n, {terms.begin(), terms.end()});
            const auto check = check_certificate(decompose(s, family, ctx));
            probe.expect(check.ok, to_string(s) + ": " + check.reason);
            if (shaped) (void)validate_shape(s, family, ctx);
            return true;
        });
    }
}

std::vector<Statement> statements() {
    std::vector<Statement> all;
    all.push_back({"C(n) = n", 2, [](Probe& p) { formula_matches_search(p, Family::One, 12); }});
    all.push_back({"A = {1}: no zero window <=> distinct prefix sums", 2, [](Probe& p) {
                       for (Value n : p.moduli(2, 8, [](const ZnContext&) { return true; }))
                           for (std::size_t len = 1; len <= std::min<std::size_t>(n - 1, 4); ++len) {
                               std::vector<Value> t(len, 0);
                               const auto w = WeightSet::one(n);
                               for (;;) {
                                   const Seq s(n, t);
                                   p.expect(has_zero_window(s, w).has_value() != prefix_sum_free(s), to_string(s));
                                   std::size_t i = 0;
                                   while (i < len && ++t[i] == n) t[i++] = 0;
                                   if (i == len) break;
                               }
                           }
                   }});
    all.push_back({"A = {1}: (n-1)! extremal sequences", 2, [](Probe& p) {
                       std::uint64_t factorial = 1;
                       for (Value n = 2; n <= std::min<Value>(p.scope, 8); ++n) {
                           factorial *= n - 1;
                           const ZnContext ctx(n);
                           EnumerateOptions o;
                           o.count_only = true;
                           o.budget = p.budget;
                           const auto e = enumerate_extremal(ctx, WeightSet::one(n), n, o);
                           if (!e.complete) throw Skip{"count budget exhausted"};
                           p.expect(e.count == factorial, "n = " + std::to_string(n));
                       }
                   }});
    all.push_back({"C_A(n) = 2, A = Z_n \\ {0}", 2, [](Probe& p) {
                       for (Value n = 2; n <= std::min<Value>(p.scope, 50); ++n)
                           p.expect(p.search(ZnContext(n), WeightSet::all_nonzero(n)).constant == 2,
                                    "n = " + std::to_string(n));
                   }});
    all.push_back({"C_U(n)(n) = 2^Omega(n), n odd", 3, [](Probe& p) { formula_matches_search(p, Family::Units, unlimited); }});
    all.push_back({"C_Q_p(p) = 3, p odd prime; C_Q_2(2) = 2", 2, [](Probe& p) {
                       for (Value n : p.moduli(2, unlimited, [](const ZnContext& c) { return c.is_prime(); }))
                           p.expect(p.search(ZnContext(n), units_pow(ZnContext(n), 2)).constant == (n == 2 ? 2u : 3u),
                                    "p = " + std::to_string(n));
                   }});
    all.push_back({"C_U(n)^2(n) = 3^Omega(n), every prime divisor >= 7", 7,
                   [](Probe& p) { formula_matches_search(p, Family::UnitsSquared, unlimited); }});
    all.push_back({"C_U(n)^3(n) = 2^Omega(n2) 3^Omega(n1), n squarefree, (n, 2*7*13) = 1", 3,
                   [](Probe& p) { formula_matches_search(p, Family::UnitsCubed, unlimited); }});
    all.push_back({"C_U(7)^3(7) = 4", 7, [](Probe& p) {
                       p.expect(p.search(ZnContext(7), units_pow(ZnContext(7), 3)).constant == 4, "n = 7");
                   }});
    all.push_back({"U(n)^j-weighted zero-sum <=> U(p^r)^j-weighted zero-sum for every p^r || n", 2, [](Probe& p) {
                       for (Value n : p.moduli(2, unlimited, [](const ZnContext&) { return true; }))
                           for (unsigned j = 1; j <= 3; ++j)
                               for (int i = 0; i < 20; ++i) {
                                   const Seq s = random_seq(p, n, 1 + p.rng() % 4);
                                   p.expect(crt_zero_sum_check(s, j) ==
                                                is_weighted_zero_sum(s, units_pow(ZnContext(n), j)),
                                            to_string(s) + " mod " + std::to_string(n));
                               }
                   }});
    all.push_back({"two terms coprime to p give a U(p^r)-weighted zero-sum, p odd", 3, [](Probe& p) {
                       for (Value n : p.moduli(3, unlimited, odd_prime_power)) {
                           const ZnContext ctx(n);
                           for (int i = 0; i < 50; ++i) {
                               const Seq base = random_seq(p, n, p.rng() % 4);
                               std::vector<Value> terms(base.terms().begin(), base.terms().end());
                               terms.insert(terms.begin() + static_cast<long>(p.rng() % (terms.size() + 1)), random_unit(p, ctx));
                               terms.push_back(random_unit(p, ctx));
                               const Seq s(n, terms);
                               p.expect(is_weighted_zero_sum(s, units_pow(ctx, 1)),
                                        to_string(s) + " mod " + std::to_string(n));
                           }
                       }
                   }});
    all.push_back({"Ax1 + Ax2 + Ax3 = Z_{p^r} for units x_i, A = U(p^r)^2, p >= 7", 7, [](Probe& p) {
                       for (Value n : p.moduli(7, 50, [](const ZnContext& c) {
                                return c.is_prime_power() && c.prime_divisors().front() >= 7;
                            })) {
                           const ZnContext ctx(n);
                           const auto u = units(ctx);
                           for (Value a : u)
                               for (Value b : u)
                                   for (Value c : u) p.expect(triple_unit_cover(ctx, a, b, c), "mod " + std::to_string(n));
                       }
                   }});
    all.push_back({"three units give a U(p^r)^2-weighted zero-sum iff p >= 7 (fails for (1,1,1) mod 2, 5 and (1,2,1) mod 3)", 2,
                   [](Probe& p) {
                       for (Value q : {2u, 5u})
                           if (q <= p.scope)
                               p.expect(!is_weighted_zero_sum(Seq(q, {1, 1, 1}), units_pow(ZnContext(q), 2)),
                                        "(1,1,1) mod " + std::to_string(q));
                       if (p.scope >= 3)
                           p.expect(!is_weighted_zero_sum(Seq(3, {1, 2, 1}), units_pow(ZnContext(3), 2)), "(1,2,1) mod 3");
                       for (Value n : p.moduli(7, unlimited, [](const ZnContext& c) {
                                return c.is_prime_power() && c.prime_divisors().front() >= 7;
                            })) {
                           const ZnContext ctx(n);
                           for (int i = 0; i < 30; ++i) {
                               std::vector<Value> t{random_unit(p, ctx), random_unit(p, ctx), random_unit(p, ctx)};
                               const Seq s(n, t);
                               p.expect(is_weighted_zero_sum(s, units_pow(ctx, 2)), to_string(s));
                           }
                       }
                   }});
    all.push_back({"three units give a U(p)^3-weighted zero-sum iff p != 2, 7, 13", 2, [](Probe& p) {
                       for (Value q : p.moduli(2, unlimited, [](const ZnContext& c) { return c.is_prime(); })) {
                           const ZnContext ctx(q);
                           const bool exception = q == 2 || q == 7 || q == 13;
                           p.expect(is_weighted_zero_sum(Seq(q, {1, 1, 1}), units_pow(ctx, 3)) != exception,
                                    "(1,1,1) mod " + std::to_string(q));
                           if (exception) continue;
                           for (int i = 0; i < 30; ++i) {
                               const Seq s(q, {random_unit(p, ctx), random_unit(p, ctx), random_unit(p, ctx)});
                               p.expect(is_weighted_zero_sum(s, units_pow(ctx, 3)), to_string(s));
                           }
                       }
                   }});
    all.push_back({"S/p U(n/p)^j-weighted zero-sum => S U(n)^j-weighted zero-sum, j = 1, 2", 4, [](Probe& p) {
                       for (Value n : p.moduli(4, unlimited, [](const ZnContext& c) { return !c.is_prime(); })) {
                           for (Value q : ZnContext(n).prime_divisors())
                               for (unsigned j = 1; j <= 2; ++j)
                                   for (int i = 0; i < 10; ++i) {
                                       const Seq s = scale_into(random_seq(p, n / q, 1 + p.rng() % 4), q, n);
                                       p.expect(lift_zero_sum_by_prime(s, q, j).holds(), to_string(s));
                                   }
                       }
                   }});
    all.push_back({"units and unit squares mod m lift to units and unit squares mod n, m | n", 2, [](Probe& p) {
                       for (Value n : p.moduli(2, 200, [](const ZnContext&) { return true; })) {
                           const ZnContext ctx(n);
                           for (Value m = 2; m <= n; ++m) {
                               if (n % m != 0) continue;
                               const ZnContext mctx(m);
                               const auto squares = unit_powers(mctx, 2);
                               for (Value b : units(mctx)) {
                                   const Value a = lift_unit({b, m}, ctx, LiftKind::Unit).value;
                                   p.expect(ctx.is_unit(a) && a % m == b, "lift " + std::to_string(b));
                               }
                               const auto n_squares = unit_powers(ctx, 2);
                               for (Value b : squares) {
                                   const Value a = lift_unit({b, m}, ctx, LiftKind::UnitSquare).value;
                                   p.expect(std::binary_search(n_squares.begin(), n_squares.end(), a) && a % m == b,
                                            "square lift " + std::to_string(b));
                               }
                           }
                       }
                   }});
    all.push_back({"recursive units construction is extremal and decomposes back, n odd", 3,
                   [](Probe& p) { round_trip(p, Family::Units, unlimited, 5); }});
    all.push_back({"recursive squares construction is extremal and decomposes back, primes >= 7", 7,
                   [](Probe& p) { round_trip(p, Family::UnitsSquared, unlimited, 5); }});
    all.push_back({"recursive cubes construction is extremal and decomposes back, n squarefree, (n, 2*7*13) = 1", 3,
                   [](Probe& p) { round_trip(p, Family::UnitsCubed, unlimited, 5); }});
    all.push_back({"every U(n)-extremal sequence splits at a prime around its middle term, n odd", 3,
                   [](Probe& p) { completeness(p, Family::Units, unlimited); }});
    all.push_back({"every U(n)^2-extremal sequence splits at a prime around positions (l+1)/3, 2(l+1)/3", 7,
                   [](Probe& p) { completeness(p, Family::UnitsSquared, unlimited); }});
    all.push_back({"every U(n)^3-extremal sequence splits in two or three parts by p mod 3", 3,
                   [](Probe& p) { completeness(p, Family::UnitsCubed, unlimited); }});
    all.push_back({"U(n)^2-extremal: exactly one prime divisor is coprime to exactly two terms", 49, [](Probe& p) {
                       for (Value n : p.moduli(49, unlimited, [](const ZnContext& c) {
                                return !c.is_prime() && family_supported(Family::UnitsSquared, c);
                            })) {
                           const ZnContext ctx(n);
                           p.stream(ctx, units_pow(ctx, 2), formula_constant(Family::UnitsSquared, ctx) - 1,
                                    [&](std::span<const Value> t) {
                                        const auto counts = coprime_term_counts(Seq(n, {t.begin(), t.end()}));
                                        const auto two = std::count_if(counts.begin(), counts.end(),
                                                                       [](const CoprimeCount& c) { return c.coprime_terms == 2; });
                                        const auto many = std::count_if(counts.begin(), counts.end(),
                                                                        [](const CoprimeCount& c) { return c.coprime_terms >= 3; });
                                        p.expect(two == 1 && many + 1 == static_cast<long>(counts.size()),
                                                 "n = " + std::to_string(n) + ": " + format_terms(t));
                                        return true;
                                    },
                                    true);
                       }
                   }});
    all.push_back({"U(7)^3-extremal sequences are exactly the orbit of (1,3,1)", 7, [](Probe& p) {
                       const ZnContext ctx(7);
                       const auto w = units_pow(ctx, 3);
                       const Seq target = canonicalize(Seq(7, {1, 3, 1}), w).canonical;
                       std::uint64_t seen = 0;
                       p.stream(ctx, w, 3, [&](std::span<const Value> t) {
                           ++seen;
                           p.expect(canonicalize(Seq(7, {t.begin(), t.end()}), w).canonical == target, format_terms(t));
                           return true;
                       });
                       p.expect(seen == canonicalize(target, w).orbit_size, "orbit size");
                   }});
    all.push_back({"A-equivalent sequences of an extremal sequence are extremal", 3, [](Probe& p) {
                       for (Family f : {Family::Units, Family::UnitsSquared, Family::UnitsCubed})
                           for (Value n : p.moduli(3, unlimited, [f](const ZnContext& c) { return family_supported(f, c); })) {
                               const ZnContext ctx(n);
                               const auto w = weight_set(f, ctx);
                               const Seq s = random_extremal(f, ctx, p.rng());
                               const auto u = units(ctx);
                               std::vector<Value> a(s.size());
                               for (auto& x : a) x = w.values()[p.rng() % w.size()];
                               const Seq t = apply_equivalence(s, u[p.rng() % u.size()], a, w);
                               p.expect(is_extremal(t, w, formula_constant(f, ctx)), to_string(t));
                           }
                   }});
    return all;
}

} // namespace

const char* to_string(Verdict verdict) noexcept {
    switch (verdict) {
    case Verdict::Passed: return "passed";
    case Verdict::Failed: return "failed";
    case Verdict::Skipped: return "skipped";
    }
    return "?";
}

std::vector<StatementReport> verify_theorems(Value scope, SearchBudget budget) {
    std::vector<StatementReport> out;
    for (const auto& st : statements()) {
        if (scope < st.min_n) continue;
        Probe probe(scope, budget);
        StatementReport r{st.name, Verdict::Passed, 0, {}};
        try {
            st.run(probe);
            if (probe.cases == 0) {
                r.verdict = Verdict::Skipped;
                r.detail = "no case in scope";
            }
        } catch (const Skip& s) {
            r.verdict = Verdict::Skipped;
            r.detail = s.why;
        } catch (const Failure& f) {
            r.verdict = Verdict::Failed;
            r.detail = f.what;
        } catch (const Error& e) {
            r.verdict = Verdict::Failed;
            r.detail = std::string(zerosum::to_string(e.kind())) + ": " + e.what();
        }
        r.cases = probe.cases;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace zerosum::cli
