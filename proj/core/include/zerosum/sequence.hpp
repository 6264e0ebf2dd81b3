#pragma once

#include "zerosum/ring.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace zerosum {

/// An ordered sequence of residues mod n. Order matters: windows are contiguous runs.
class Seq {
public:
    Seq() = default;
    Seq(Value modulus, std::vector<Value> terms);
    Seq(Value modulus, std::initializer_list<Value> terms) : Seq(modulus, std::vector<Value>(terms)) {}

    [[nodiscard]] Value modulus() const noexcept { return modulus_; }
    [[nodiscard]] std::span<const Value> terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] Value operator[](std::size_t i) const noexcept { return terms_[i]; }
    [[nodiscard]] Residue at(std::size_t i) const;

    /// Contiguous run [first, first + count).
    [[nodiscard]] Seq slice(std::size_t first, std::size_t count) const;

    friend bool operator==(const Seq&, const Seq&) = default;
    friend std::strong_ordering operator<=>(const Seq& a, const Seq& b) {
        if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
        return a.terms_ <=> b.terms_;
    }

private:
    Value modulus_ = 0;
    std::vector<Value> terms_;
};

/// Termwise reduction to Z_m, m | n (S^{(p)} when m is a prime power).
[[nodiscard]] Seq natural_map(const Seq& seq, Value m);

/// Terms divided by p, as a sequence over Z_{n/p}. Every term must be a multiple of p.
[[nodiscard]] Seq divide_by(const Seq& seq, Value p);

/// Terms multiplied by p, lifted from Z_{n/p} into Z_n.
[[nodiscard]] Seq scale_into(const Seq& seq, Value p, Value n);

/// "1,2,3"
[[nodiscard]] std::string format_terms(std::span<const Value> terms);
/// "(1,2,3)"
[[nodiscard]] std::string to_string(const Seq& seq);
/// Parses "1,2,3" into a sequence over Z_n. The empty string is the empty sequence.
[[nodiscard]] Seq parse_seq(Value n, std::string_view text);

} // namespace zerosum
