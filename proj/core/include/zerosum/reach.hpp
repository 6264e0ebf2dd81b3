#pragma once

#include "zerosum/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zerosum {

namespace bits {

[[nodiscard]] constexpr std::size_t words_for(Value n) noexcept { return (n + 63) / 64; }

/// dst |= src rotated by `shift` positions in an n-bit cyclic mask. dst and src must not alias.
void rotate_or(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, Value n, Value shift) noexcept;

[[nodiscard]] inline bool test(std::span<const std::uint64_t> w, Value i) noexcept { return (w[i >> 6] >> (i & 63)) & 1U; }
inline void set(std::span<std::uint64_t> w, Value i) noexcept { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

} // namespace bits

/// A subset of Z_n stored as an n-bit mask: the weighted sums reachable by a window.
class ReachSet {
public:
    explicit ReachSet(Value n);

    [[nodiscard]] static ReachSet singleton(Value n, Value v);
    [[nodiscard]] static ReachSet from_values(Value n, std::span<const Value> values);

    [[nodiscard]] Value modulus() const noexcept { return n_; }
    [[nodiscard]] bool contains(Value v) const noexcept { return v < n_ && bits::test(words_, v); }
    void insert(Value v);
    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return count() == 0; }
    [[nodiscard]] bool full() const noexcept { return count() == n_; }
    [[nodiscard]] std::vector<Value> elements() const;

    /// { a + b : a in this, b in other }
    [[nodiscard]] ReachSet sumset(const ReachSet& other) const;
    /// { c * a : a in this }
    [[nodiscard]] ReachSet scaled(Value c) const;
    ReachSet& operator|=(const ReachSet& other);

    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const ReachSet&, const ReachSet&) = default;

private:
    Value n_;
    std::vector<std::uint64_t> words_;
};

} // namespace zerosum
