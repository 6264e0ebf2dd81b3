#pragma once

#include "zerosum/family.hpp"
#include "zerosum/sequence.hpp"

#include <string>
#include <vector>

namespace zerosum {

struct ShapeCoefficients {
    std::string name;           ///< e.g. "a", "b"
    std::vector<Value> values;  ///< x_i / multiplier, as residues mod n / multiplier
};

/// A closed-form match. `primes` is the ordering (q1, q2, ...) of the prime factors of n
/// under which the sequence has the named form.
struct ShapeMatch {
    std::string form;
    std::vector<Value> primes;
    std::vector<ShapeCoefficients> coefficients;
};

/// Matches an extremal sequence against the explicit forms for units with Omega(n) <= 3 and
/// for squares with Omega(n) == 2. Orderings are tried in lexicographic order of the prime
/// factors with multiplicity. Throws DomainRejected outside those regimes and
/// CharacterizationViolated if no form fits.
[[nodiscard]] ShapeMatch validate_shape(const Seq& seq, Family family, const ZnContext& ctx);

[[nodiscard]] bool shape_applies(Family family, const ZnContext& ctx);

} // namespace zerosum
