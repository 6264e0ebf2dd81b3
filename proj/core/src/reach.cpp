#include "zerosum/reach.hpp"

#include "zerosum/error.hpp"

#include <bit>

namespace zerosum {

namespace bits {

namespace {

std::uint64_t top_mask(Value n) noexcept {
    const unsigned r = n & 63U;
    return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

} // namespace

void rotate_or(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, Value n, Value shift) noexcept {
    shift %= n;
    const std::size_t w = dst.size();
    if (w == 1) {
        const std::uint64_t x = src[0];
        const std::uint64_t up = shift == 0 ? x : (x << shift);
        const std::uint64_t down = shift == 0 ? 0 : (x >> (n - shift));
        dst[0] |= (up | down) & top_mask(n);
        return;
    }
    if (shift == 0) {
        for (std::size_t k = 0; k < w; ++k) dst[k] |= src[k];
        return;
    }

    // upward part: bit i -> i + shift for i < n - shift
    {
        const std::size_t ws = shift / 64;
        const unsigned bs = shift % 64;
        for (std::size_t k = w; k-- > ws;) {
            std::uint64_t v = src[k - ws] << bs;
            if (bs != 0 && k > ws) v |= src[k - ws - 1] >> (64 - bs);
            dst[k] |= v;
        }
        dst[w - 1] &= top_mask(n);
    }
    // wrapped part: bit i -> i - (n - shift) for i >= n - shift
    {
        const Value down = n - shift;
        const std::size_t ws = down / 64;
        const unsigned bs = down % 64;
        for (std::size_t k = 0; k + ws < w; ++k) {
            std::uint64_t v = src[k + ws] >> bs;
            if (bs != 0 && k + ws + 1 < w) v |= src[k + ws + 1] << (64 - bs);
            dst[k] |= v;
        }
    }
}

} // namespace bits

ReachSet::ReachSet(Value n) : n_(n), words_(bits::words_for(n), 0) { require(n >= 1, "reach set modulus must be positive"); }

ReachSet ReachSet::singleton(Value n, Value v) {
    ReachSet r(n);
    r.insert(v);
    return r;
}

ReachSet ReachSet::from_values(Value n, std::span<const Value> values) {
    ReachSet r(n);
    for (Value v : values) r.insert(v % n);
    return r;
}

void ReachSet::insert(Value v) {
    require(v < n_, "reach set element out of range");
    bits::set(words_, v);
}

std::size_t ReachSet::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::vector<Value> ReachSet::elements() const {
    std::vector<Value> out;
    for (Value i = 0; i < n_; ++i)
        if (bits::test(words_, i)) out.push_back(i);
    return out;
}

ReachSet ReachSet::sumset(const ReachSet& other) const {
    require(n_ == other.n_, "sumset of reach sets with different moduli");
    ReachSet out(n_);
    for (Value t : other.elements()) bits::rotate_or(out.words_, words_, n_, t);
    return out;
}

ReachSet ReachSet::scaled(Value c) const {
    ReachSet out(n_);
    for (Value v : elements()) bits::set(out.words_, mul_mod(c, v, n_));
    return out;
}

ReachSet& ReachSet::operator|=(const ReachSet& other) {
    require(n_ == other.n_, "union of reach sets with different moduli");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
}

} // namespace zerosum
