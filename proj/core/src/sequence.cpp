#include "zerosum/sequence.hpp"

#include "zerosum/error.hpp"

#include <charconv>

namespace zerosum {

Seq::Seq(Value modulus, std::vector<Value> terms) : modulus_(modulus), terms_(std::move(terms)) {
    require(modulus_ >= 2, "sequence modulus must be at least 2");
    for (Value t : terms_)
        if (t >= modulus_) fail(ErrorKind::InvalidArgument, "term " + std::to_string(t) + " out of range for Z_" + std::to_string(modulus_));
}

Residue Seq::at(std::size_t i) const {
    require(i < terms_.size(), "sequence index out of range");
    return {terms_[i], modulus_};
}

Seq Seq::slice(std::size_t first, std::size_t count) const {
    require(first + count <= terms_.size(), "slice out of range");
    return Seq(modulus_, std::vector<Value>(terms_.begin() + static_cast<std::ptrdiff_t>(first),
                                            terms_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

Seq natural_map(const Seq& seq, Value m) {
    require(m >= 2 && seq.modulus() % m == 0,
            "natural map: " + std::to_string(m) + " does not divide " + std::to_string(seq.modulus()));
    std::vector<Value> out;
    out.reserve(seq.size());
    for (Value t : seq.terms()) out.push_back(t % m);
    return Seq(m, std::move(out));
}

Seq divide_by(const Seq& seq, Value p) {
    const Value n = seq.modulus();
    require(p >= 2 && n % p == 0 && n / p >= 2,
            "divide_by: " + std::to_string(p) + " must be a proper divisor of " + std::to_string(n));
    std::vector<Value> out;
    out.reserve(seq.size());
    for (Value t : seq.terms()) {
        if (t % p != 0) fail(ErrorKind::InvalidArgument, "divide_by: " + std::to_string(p) + " does not divide term " + std::to_string(t));
        out.push_back(t / p);
    }
    return Seq(n / p, std::move(out));
}

Seq scale_into(const Seq& seq, Value p, Value n) {
    require(seq.modulus() * p == n, "scale_into: modulus mismatch");
    std::vector<Value> out;
    out.reserve(seq.size());
    for (Value t : seq.terms()) out.push_back(t * p);
    return Seq(n, std::move(out));
}

std::string format_terms(std::span<const Value> terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(terms[i]);
    }
    return out;
}

std::string to_string(const Seq& seq) { return "(" + format_terms(seq.terms()) + ")"; }

Seq parse_seq(Value n, std::string_view text) {
    std::vector<Value> terms;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto token = text.substr(0, comma);
        Value v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        require(ec == std::errc{} && ptr == token.data() + token.size() && !token.empty(),
                "malformed sequence term '" + std::string(token) + "'");
        terms.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        require(!text.empty(), "trailing comma in sequence");
    }
    return Seq(n, std::move(terms));
}

} // namespace zerosum
