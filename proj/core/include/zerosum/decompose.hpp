#pragma once

// Structural certificates for extremal sequences and the helpers used to check them.

#include "zerosum/builders.hpp"
#include "zerosum/family.hpp"
#include "zerosum/sequence.hpp"

#include <string>
#include <vector>

namespace zerosum {

/// The mod-p condition on the terms left at the middle positions.
struct ConnectorCheck {
    std::vector<std::size_t> positions; ///< 1-based
    std::vector<Value> values;          ///< terms of the sequence at those positions
    std::vector<Value> images;          ///< values mod p
    std::string condition;
    friend bool operator==(const ConnectorCheck&, const ConnectorCheck&) = default;
};

/// A decomposition tree. Splits record the structural prime, where the connectors sit and one
/// sub-certificate per part (its sequence is the part divided by p). Leaves carry a base-case tag.
struct Certificate {
    Family family = Family::Units;
    Value n = 0;
    Seq sequence;
    Value prime = 0;
    std::vector<std::size_t> middle_positions; ///< 1-based
    std::vector<Certificate> children;
    ConnectorCheck connector;
    std::string leaf;
    /// Other primes matching the same divisibility pattern, ascending.
    std::vector<Value> alternate_primes;

    [[nodiscard]] bool is_leaf() const noexcept { return prime == 0; }
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// 1-based middle positions of a sequence of the given length split into `parts` parts.
[[nodiscard]] std::vector<std::size_t> middle_positions(std::size_t length, unsigned parts);

/// Prime divisors p < n of the modulus that divide every term off the middle positions,
/// ascending. With a family the part count is split_arity(family, p).
[[nodiscard]] std::vector<Value> split_primes(const Seq& seq, Family family);
[[nodiscard]] std::vector<Value> split_primes(const Seq& seq, unsigned parts);

/// Checks extremality, then splits recursively. Throws NotExtremal, DomainRejected for
/// unsupported (family, n), and CharacterizationViolated if no prime fits the pattern, if the
/// connector condition fails, or if the squares prime is not unique.
[[nodiscard]] Certificate decompose(const Seq& seq, Family family, const ZnContext& ctx);

struct CertificateCheck {
    bool ok = false;
    std::string reason;
};

/// Re-validates a certificate from its recorded data alone; leaves are checked directly.
[[nodiscard]] CertificateCheck check_certificate(const Certificate& cert);

[[nodiscard]] BuildRecipe to_recipe(const Certificate& cert);

struct CoprimeCount {
    Value prime = 0;
    std::size_t coprime_terms = 0;
};

/// For each distinct prime divisor of n, how many terms it does not divide.
[[nodiscard]] std::vector<CoprimeCount> coprime_term_counts(const Seq& seq);

struct LiftImplication {
    bool quotient_zero_sum = false; ///< S/p is U(n/p)^j-weighted zero-sum
    bool zero_sum = false;          ///< S is U(n)^j-weighted zero-sum
    [[nodiscard]] bool holds() const noexcept { return !quotient_zero_sum || zero_sum; }
};

/// Both sides of "S/p zero-sum implies S zero-sum". Every term must be divisible by p.
[[nodiscard]] LiftImplication lift_zero_sum_by_prime(const Seq& seq, Value p, unsigned power);

/// Certificate as canonical JSON: fixed field order, alternates ascending.
[[nodiscard]] std::string to_json(const Certificate& cert, int indent = -1);

} // namespace zerosum
