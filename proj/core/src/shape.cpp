#include "zerosum/shape.hpp"

#include "zerosum/error.hpp"

#include "family_cache.hpp"

#include <algorithm>
#include <optional>

namespace zerosum {

namespace {

// One position of a form: x = coefficient * (product of q[multiplier]), and the
// coefficient must stay nonzero mod q[coprime].
struct Slot {
    std::vector<int> multiplier;
    char letter;
    int coprime;
};

struct Form {
    const char* name;
    std::vector<Slot> slots;
    /// Slot index pairs whose coefficients must pass the Q_q coset test for q = q[prime].
    std::vector<std::pair<std::pair<int, int>, int>> pairs;
};

const std::vector<Form>& units_forms(unsigned omega) {
    static const std::vector<Form> one = {{"(a1), q1 !| a1", {{{}, 'a', 0}}, {}}};
    static const std::vector<Form> two = {
        {"(b1 q1, a1, b2 q1), q1 !| a1, q2 !| b1 b2", {{{0}, 'b', 1}, {{}, 'a', 0}, {{0}, 'b', 1}}, {}}};
    static const std::vector<Form> three = {
        {"(a1 q1q2, b1 q1, a2 q1q2, c1, a3 q1q2, b2 q1, a4 q1q2)",
         {{{0, 1}, 'a', 2}, {{0}, 'b', 1}, {{0, 1}, 'a', 2}, {{}, 'c', 0}, {{0, 1}, 'a', 2}, {{0}, 'b', 1}, {{0, 1}, 'a', 2}},
         {}},
        {"(a1 q1q2, b1 q1, a2 q1q2, c1, b2 q1q3, a3 q1, b3 q1q3)",
         {{{0, 1}, 'a', 2}, {{0}, 'b', 1}, {{0, 1}, 'a', 2}, {{}, 'c', 0}, {{0, 2}, 'b', 1}, {{0}, 'a', 2}, {{0, 2}, 'b', 1}},
         {}}};
    static const std::vector<Form> none;
    switch (omega) {
    case 1: return one;
    case 2: return two;
    case 3: return three;
    default: return none;
    }
}

const Form& squares_form() {
    static const Form form{"(b1 q1, b2 q1, a1, b3 q1, b4 q1, a2, b5 q1, b6 q1)",
                           {{{0}, 'b', 1},
                            {{0}, 'b', 1},
                            {{}, 'a', 0},
                            {{0}, 'b', 1},
                            {{0}, 'b', 1},
                            {{}, 'a', 0},
                            {{0}, 'b', 1},
                            {{0}, 'b', 1}},
                           {{{0, 1}, 1}, {{3, 4}, 1}, {{6, 7}, 1}, {{2, 5}, 0}}};
    return form;
}

std::optional<ShapeMatch> match(const Seq& seq, const Form& form, const std::vector<Value>& q, unsigned power) {
    if (seq.size() != form.slots.size()) return std::nullopt;
    std::vector<Value> coeff(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Slot& slot = form.slots[i];
        Value m = 1;
        for (int k : slot.multiplier) m *= q[static_cast<std::size_t>(k)];
        if (seq[i] % m != 0) return std::nullopt;
        coeff[i] = seq[i] / m;
        if (coeff[i] % q[static_cast<std::size_t>(slot.coprime)] == 0) return std::nullopt;
    }
    for (const auto& [slots, prime_index] : form.pairs) {
        const Value p = q[static_cast<std::size_t>(prime_index)];
        const auto& weights = detail::cached_unit_powers(p, power);
        const Value x = coeff[static_cast<std::size_t>(slots.first)] % p;
        const Value y = coeff[static_cast<std::size_t>(slots.second)] % p;
        if (!coset_test_pair({x, p}, {y, p}, weights)) return std::nullopt;
    }
    ShapeMatch out{form.name, q, {}};
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const std::string name(1, form.slots[i].letter);
        auto it = std::find_if(out.coefficients.begin(), out.coefficients.end(),
                               [&](const ShapeCoefficients& c) { return c.name == name; });
        if (it == out.coefficients.end()) {
            out.coefficients.push_back({name, {}});
            it = std::prev(out.coefficients.end());
        }
        it->values.push_back(coeff[i]);
    }
    return out;
}

} // namespace

bool shape_applies(Family family, const ZnContext& ctx) {
    if (!family_supported(family, ctx)) return false;
    if (family == Family::Units) return ctx.omega() >= 1 && ctx.omega() <= 3;
    if (family == Family::UnitsSquared) return ctx.omega() == 2;
    return false;
}

ShapeMatch validate_shape(const Seq& seq, Family family, const ZnContext& ctx) {
    require(seq.modulus() == ctx.modulus(), "sequence and context disagree on the modulus");
    if (!shape_applies(family, ctx))
        fail(ErrorKind::DomainRejected, "no closed-form shape for " + to_string(family) + " at n = " +
                                            std::to_string(ctx.modulus()));
    std::vector<Value> primes;
    for (const auto& pp : ctx.factorization())
        for (unsigned e = 0; e < pp.exponent; ++e) primes.push_back(pp.prime);
    const std::vector<Form> squares{squares_form()};
    const auto& forms = family == Family::Units ? units_forms(ctx.omega()) : squares;
    do {
        for (const auto& form : forms)
            if (auto m = match(seq, form, primes, unit_power(family))) return *m;
    } while (std::next_permutation(primes.begin(), primes.end()));
    fail(ErrorKind::CharacterizationViolated,
         to_string(seq) + " over Z_" + std::to_string(ctx.modulus()) + " matches no closed form");
}

} // namespace zerosum
