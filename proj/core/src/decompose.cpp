#include "zerosum/decompose.hpp"

#include "zerosum/engine.hpp"
#include "zerosum/error.hpp"

#include "family_cache.hpp"

#include <algorithm>
#include <variant>

namespace zerosum {

namespace {

std::string leaf_tag(Family family, Value n) {
    if (family == Family::One) return "distinct prefix sums";
    return split_arity(family, n) == 3 ? "coset pair" : "unit singleton";
}

bool divisible_off_middles(const Seq& seq, Value p, unsigned parts) {
    if ((seq.size() + 1) % parts != 0) return false;
    const auto mids = middle_positions(seq.size(), parts);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (std::find(mids.begin(), mids.end(), i + 1) != mids.end()) continue;
        if (seq[i] % p != 0) return false;
    }
    return true;
}

template <class PartsOf>
std::vector<Value> matching_primes(const Seq& seq, PartsOf parts_of) {
    const ZnContext ctx(seq.modulus());
    std::vector<Value> out;
    if (ctx.is_prime()) return out;
    for (Value p : ctx.prime_divisors())
        if (divisible_off_middles(seq, p, parts_of(p))) out.push_back(p);
    return out;
}

ConnectorCheck connector_check(const Seq& seq, Family family, Value p, const std::vector<std::size_t>& mids) {
    ConnectorCheck c;
    c.positions = mids;
    for (std::size_t pos : mids) {
        c.values.push_back(seq[pos - 1]);
        c.images.push_back(seq[pos - 1] % p);
    }
    if (mids.size() == 1)
        c.condition = std::to_string(p) + " does not divide the middle term";
    else
        c.condition = "image mod " + std::to_string(p) + " has no U(" + std::to_string(p) + ")^" +
                      std::to_string(unit_power(family)) + "-weighted zero-sum subsequence";
    return c;
}

bool connector_holds(const ConnectorCheck& c, Family family, Value p) {
    if (c.images.size() == 1) return c.images[0] != 0;
    if (c.images.size() != 2) return false;
    return coset_test_pair({c.images[0], p}, {c.images[1], p}, detail::cached_weights(family, p));
}

std::vector<Seq> parts_of(const Seq& seq, Value p, const std::vector<std::size_t>& mids) {
    std::vector<Seq> out;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= mids.size(); ++k) {
        const std::size_t end = k < mids.size() ? mids[k] - 1 : seq.size();
        out.push_back(divide_by(seq.slice(start, end - start), p));
        start = end + 1;
    }
    return out;
}

Certificate leaf_certificate(const Seq& seq, Family family) {
    Certificate cert;
    cert.family = family;
    cert.n = seq.modulus();
    cert.sequence = seq;
    cert.leaf = leaf_tag(family, seq.modulus());
    return cert;
}

bool extremal_for(const Seq& seq, Family family) {
    const Value n = seq.modulus();
    return is_extremal(seq, detail::cached_weights(family, n), detail::cached_formula_constant(family, n));
}

Certificate split(const Seq& seq, Family family, const ZnContext& ctx);

// Certificate with structural prime p, or the reason p fails.
std::variant<Certificate, std::string> try_prime(const Seq& seq, Family family, Value p) {
    const auto mids = middle_positions(seq.size(), split_arity(family, p));
    Certificate cert;
    cert.family = family;
    cert.n = seq.modulus();
    cert.sequence = seq;
    cert.prime = p;
    cert.middle_positions = mids;
    cert.connector = connector_check(seq, family, p, mids);
    if (!connector_holds(cert.connector, family, p))
        return "connector terms " + format_terms(cert.connector.values) + " fail: " + cert.connector.condition;
    const ZnContext child_ctx(seq.modulus() / p);
    for (const Seq& part : parts_of(seq, p, mids)) {
        if (!extremal_for(part, family))
            return "part " + to_string(part) + " over Z_" + std::to_string(child_ctx.modulus()) + " is not extremal";
        cert.children.push_back(split(part, family, child_ctx));
    }
    return cert;
}

Certificate split(const Seq& seq, Family family, const ZnContext& ctx) {
    if (family == Family::One || ctx.is_prime()) return leaf_certificate(seq, family);
    const auto primes = split_primes(seq, family);
    const auto where = [&] { return to_string(seq) + " over Z_" + std::to_string(ctx.modulus()); };
    if (primes.empty())
        fail(ErrorKind::CharacterizationViolated,
             "no prime divisor of n divides every term of " + where() + " off the middle positions");
    if (family == Family::UnitsSquared && primes.size() > 1)
        fail(ErrorKind::CharacterizationViolated, "structural prime of " + where() + " is not unique");
    std::string first_reason;
    for (Value p : primes) {
        auto attempt = try_prime(seq, family, p);
        if (auto* cert = std::get_if<Certificate>(&attempt)) {
            for (Value q : primes)
                if (q != p) cert->alternate_primes.push_back(q);
            return std::move(*cert);
        }
        if (first_reason.empty()) first_reason = "p = " + std::to_string(p) + ": " + std::get<std::string>(attempt);
    }
    fail(ErrorKind::CharacterizationViolated, where() + ": " + first_reason);
}

std::string check(const Certificate& cert) {
    const Value n = cert.n;
    if (cert.sequence.modulus() != n) return "sequence modulus differs from n";
    const ZnContext ctx(n);
    if (!family_supported(cert.family, ctx)) return to_string(cert.family) + " is not characterized at n = " + std::to_string(n);
    const auto constant = detail::cached_formula_constant(cert.family, n);
    if (cert.sequence.size() + 1 != constant) return "length differs from the constant minus one";

    if (cert.is_leaf()) {
        if (!cert.children.empty() || !cert.middle_positions.empty()) return "leaf with split data";
        if (cert.family != Family::One && !ctx.is_prime()) return "leaf over a composite modulus";
        if (cert.leaf != leaf_tag(cert.family, n)) return "leaf tag '" + cert.leaf + "' does not fit";
        if (!extremal_for(cert.sequence, cert.family)) return "leaf " + to_string(cert.sequence) + " is not extremal";
        return {};
    }

    const Value p = cert.prime;
    if (!cert.leaf.empty()) return "split carries a leaf tag";
    if (!is_prime(p) || n % p != 0 || p == n) return "prime " + std::to_string(p) + " is not a proper prime divisor";
    const unsigned arity = split_arity(cert.family, p);
    const auto mids = middle_positions(cert.sequence.size(), arity);
    if (cert.middle_positions != mids) return "middle positions do not fit the length";
    if (!divisible_off_middles(cert.sequence, p, arity)) return "a term off the middle positions is not divisible by p";
    if (cert.connector != connector_check(cert.sequence, cert.family, p, mids)) return "connector record mismatch";
    if (!connector_holds(cert.connector, cert.family, p)) return "connector condition fails";
    const auto parts = parts_of(cert.sequence, p, mids);
    if (cert.children.size() != parts.size()) return "wrong number of children";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& child = cert.children[i];
        if (child.family != cert.family || child.n != n / p || child.sequence != parts[i])
            return "child " + std::to_string(i + 1) + " is not the divided part";
        if (auto reason = check(child); !reason.empty()) return "child " + std::to_string(i + 1) + ": " + reason;
    }
    auto alternates = cert.alternate_primes;
    if (!std::is_sorted(alternates.begin(), alternates.end())) return "alternate primes not ascending";
    for (Value q : alternates)
        if (q == p || !divisible_off_middles(cert.sequence, q, split_arity(cert.family, q)))
            return "alternate prime " + std::to_string(q) + " does not fit the pattern";
    return {};
}

} // namespace

std::vector<std::size_t> middle_positions(std::size_t length, unsigned parts) {
    require(parts >= 2 && (length + 1) % parts == 0,
            "length " + std::to_string(length) + " does not split into " + std::to_string(parts) + " parts");
    const std::size_t block = (length + 1) / parts;
    std::vector<std::size_t> out;
    for (unsigned i = 1; i < parts; ++i) out.push_back(block * i);
    return out;
}

std::vector<Value> split_primes(const Seq& seq, Family family) {
    return matching_primes(seq, [family](Value p) { return split_arity(family, p); });
}

std::vector<Value> split_primes(const Seq& seq, unsigned parts) {
    return matching_primes(seq, [parts](Value) { return parts; });
}

Certificate decompose(const Seq& seq, Family family, const ZnContext& ctx) {
    require(seq.modulus() == ctx.modulus(), "sequence and context disagree on the modulus");
    require_supported(family, ctx);
    if (!extremal_for(seq, family))
        fail(ErrorKind::NotExtremal, to_string(seq) + " is not " + to_string(family) + "-extremal in Z_" +
                                         std::to_string(ctx.modulus()));
    return split(seq, family, ctx);
}

CertificateCheck check_certificate(const Certificate& cert) {
    auto reason = check(cert);
    return {reason.empty(), std::move(reason)};
}

BuildRecipe to_recipe(const Certificate& cert) {
    BuildRecipe r;
    r.family = cert.family;
    r.n = cert.n;
    if (cert.is_leaf()) {
        r.leaf_terms.assign(cert.sequence.terms().begin(), cert.sequence.terms().end());
        return r;
    }
    r.prime = cert.prime;
    r.connectors = cert.connector.values;
    for (const auto& child : cert.children) r.children.push_back(to_recipe(child));
    return r;
}

std::vector<CoprimeCount> coprime_term_counts(const Seq& seq) {
    std::vector<CoprimeCount> out;
    for (Value p : ZnContext(seq.modulus()).prime_divisors()) {
        const auto terms = seq.terms();
        out.push_back({p, static_cast<std::size_t>(
                              std::count_if(terms.begin(), terms.end(), [p](Value x) { return x % p != 0; }))});
    }
    return out;
}

LiftImplication lift_zero_sum_by_prime(const Seq& seq, Value p, unsigned power) {
    const ZnContext ctx(seq.modulus());
    require(is_prime(p) && ctx.divides(p), std::to_string(p) + " is not a prime divisor of " + std::to_string(ctx.modulus()));
    require(power >= 1, "unit power must be at least 1");
    const Seq quotient = divide_by(seq, p);
    const ZnContext qctx(quotient.modulus());
    return {is_weighted_zero_sum(quotient, WeightSet::units_pow(qctx, power)),
            is_weighted_zero_sum(seq, WeightSet::units_pow(ctx, power))};
}

} // namespace zerosum
