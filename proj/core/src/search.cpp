#include "zerosum/search.hpp"

#include "zerosum/canonical.hpp"
#include "zerosum/engine.hpp"
#include "zerosum/error.hpp"
#include "zerosum/reach.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

// The search state after a prefix is the union, over every suffix window (including the
// empty one), of the weighted sums that window reaches. Appending y is legal iff no element
// of the state is the negative of an element of {a*y : a in A}, and the next state is
// {0} | (state + {a*y}). The union determines every future window decision, so the longest
// extension is a function of the state alone and is memoized on it.

namespace zerosum {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExceeded {};

std::uint64_t mix(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Open-addressing map from fixed-width bit masks to V.
template <class V>
class StateTable {
public:
    explicit StateTable(std::size_t words) : words_(words) { rehash(1024); }

    [[nodiscard]] const V* find(std::span<const std::uint64_t> key) const {
        for (std::size_t slot = hash(key) & mask_;; slot = (slot + 1) & mask_) {
            if (!used_[slot]) return nullptr;
            if (std::equal(key.begin(), key.end(), keys_.begin() + static_cast<std::ptrdiff_t>(slot * words_)))
                return &values_[slot];
        }
    }

    void insert(std::span<const std::uint64_t> key, V value) {
        if (2 * (size_ + 1) > used_.size()) rehash(used_.size() * 2);
        place(key, value);
    }

    [[nodiscard]] std::size_t size() const noexcept { return size_; }

private:
    [[nodiscard]] std::size_t hash(std::span<const std::uint64_t> key) const noexcept {
        std::uint64_t h = 0;
        for (auto w : key) h = mix(h ^ w);
        return static_cast<std::size_t>(h);
    }

    void place(std::span<const std::uint64_t> key, V value) {
        std::size_t slot = hash(key) & mask_;
        while (used_[slot]) {
            if (std::equal(key.begin(), key.end(), keys_.begin() + static_cast<std::ptrdiff_t>(slot * words_))) {
                values_[slot] = value;
                return;
            }
            slot = (slot + 1) & mask_;
        }
        used_[slot] = 1;
        std::copy(key.begin(), key.end(), keys_.begin() + static_cast<std::ptrdiff_t>(slot * words_));
        values_[slot] = value;
        ++size_;
    }

    void rehash(std::size_t capacity) {
        std::vector<std::uint64_t> old_keys = std::move(keys_);
        std::vector<V> old_values = std::move(values_);
        std::vector<std::uint8_t> old_used = std::move(used_);
        keys_.assign(capacity * words_, 0);
        values_.assign(capacity, V{});
        used_.assign(capacity, 0);
        mask_ = capacity - 1;
        size_ = 0;
        for (std::size_t s = 0; s < old_used.size(); ++s)
            if (old_used[s])
                place(std::span<const std::uint64_t>(old_keys.data() + s * words_, words_), old_values[s]);
    }

    std::size_t words_;
    std::vector<std::uint64_t> keys_;
    std::vector<V> values_;
    std::vector<std::uint8_t> used_;
    std::size_t mask_ = 0;
    std::size_t size_ = 0;
};

/// Residues grouped by their weighted image {a*y : a in A}. Terms in one class are
/// interchangeable in every window.
struct TermClass {
    Value rep = 0;
    std::vector<Value> members;
    std::vector<Value> image;
    std::vector<Value> negated_image;
};

struct FirstTerm {
    Value rep = 0;
    std::uint64_t orbit_size = 0;
    std::size_t cls = 0;
};

class ExtensionSearch {
public:
    ExtensionSearch(const ZnContext& ctx, const WeightSet& weights, SearchBudget budget)
        : n_(ctx.modulus()), words_(bits::words_for(n_)), budget_(budget), longest_(words_), start_(Clock::now()) {
        require(weights.modulus() == n_, "weights and context disagree on the modulus");
        if (n_ > max_search_modulus)
            fail(ErrorKind::DomainRejected, "exhaustive search supports n <= " + std::to_string(max_search_modulus));

        std::map<std::vector<Value>, std::size_t> by_image;
        std::vector<std::size_t> class_of(n_, npos);
        for (Value y = 0; y < n_; ++y) {
            const auto image = term_image(y, weights).elements();
            if (image.front() == 0) continue; // the singleton window (y) is already a zero-sum
            auto [it, fresh] = by_image.try_emplace(image, classes_.size());
            if (fresh) {
                TermClass cls;
                cls.rep = y;
                cls.image = image;
                for (Value t : image) cls.negated_image.push_back(neg_mod(t, n_));
                classes_.push_back(std::move(cls));
            }
            classes_[it->second].members.push_back(y);
            class_of[y] = it->second;
        }

        const auto unit_group = units(ctx);
        std::vector<bool> seen(n_, false);
        for (Value y = 1; y < n_; ++y) {
            if (seen[y] || class_of[y] == npos) continue;
            std::uint64_t orbit = 0;
            for (Value c : unit_group) {
                const Value z = mul_mod(c, y, n_);
                if (!seen[z]) {
                    seen[z] = true;
                    ++orbit;
                }
            }
            first_.push_back({y, orbit, class_of[y]});
        }

        root_.assign(words_, 0);
        bits::set(root_, 0);
    }

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
    [[nodiscard]] const std::vector<Value>& deepest() const noexcept { return deepest_; }
    [[nodiscard]] const std::vector<TermClass>& classes() const noexcept { return classes_; }
    [[nodiscard]] const std::vector<FirstTerm>& first_terms() const noexcept { return first_; }
    [[nodiscard]] std::span<const std::uint64_t> root() const noexcept { return root_; }

    [[nodiscard]] bool legal(std::span<const std::uint64_t> state, const TermClass& cls) const noexcept {
        for (Value t : cls.negated_image)
            if (bits::test(state, t)) return false;
        return true;
    }

    void extend(std::span<std::uint64_t> next, std::span<const std::uint64_t> state, const TermClass& cls) const noexcept {
        std::fill(next.begin(), next.end(), 0);
        for (Value t : cls.image) bits::rotate_or(next, state, n_, t);
        bits::set(next, 0);
    }

    /// Maximum number of terms that can still be appended from this state.
    unsigned longest(std::span<const std::uint64_t> state) {
        if (const auto* hit = longest_.find(state)) return *hit;
        tick();
        const auto next = scratch(scratch_, path_.size());
        unsigned best = 0;
        for (const auto& cls : classes_) {
            if (!legal(state, cls)) continue;
            extend(next, state, cls);
            path_.push_back(cls.rep);
            note_depth();
            const unsigned sub = longest(next);
            path_.pop_back();
            best = std::max(best, sub + 1);
        }
        longest_.insert(state, best);
        return best;
    }

    /// Longest zero-window-free length from the empty sequence, with first-term reduction.
    unsigned longest_from_root() {
        const auto next = scratch(scratch_, 0);
        unsigned best = 0;
        for (const auto& first : first_) {
            extend(next, root_, classes_[first.cls]);
            path_.assign(1, first.rep);
            note_depth();
            best = std::max(best, longest(next) + 1);
        }
        path_.clear();
        return best;
    }

    /// Lexicographically least sequence of the given (achievable) length.
    std::vector<Value> least_witness(unsigned length) {
        std::vector<Value> out;
        std::vector<std::uint64_t> state = root_;
        std::vector<std::uint64_t> next(words_);
        for (unsigned remaining = length; remaining > 0; --remaining) {
            bool found = false;
            auto try_class = [&](const TermClass& cls) {
                if (!legal(state, cls)) return false;
                extend(next, state, cls);
                if (longest(next) + 1 < remaining) return false;
                out.push_back(cls.rep);
                state.swap(next);
                return true;
            };
            if (out.empty()) {
                for (const auto& first : first_)
                    if ((found = try_class(classes_[first.cls]))) break;
            } else {
                for (const auto& cls : classes_)
                    if ((found = try_class(cls))) break;
            }
            if (!found) fail(ErrorKind::Internal, "witness reconstruction lost its path");
        }
        return out;
    }

    /// Number of sequences (all terms, not class representatives) of exactly `remaining` more terms.
    std::uint64_t count(std::span<const std::uint64_t> state, unsigned remaining) {
        if (remaining == 0) return 1;
        if (longest(state) < remaining) return 0;
        if (counts_.size() <= remaining) counts_.resize(remaining + 1, StateTable<std::uint64_t>(words_));
        if (const auto* hit = counts_[remaining].find(state)) return *hit;
        tick();
        const auto next = scratch(count_scratch_, remaining);
        std::uint64_t total = 0;
        for (const auto& cls : classes_) {
            if (!legal(state, cls)) continue;
            extend(next, state, cls);
            total = checked_add(total, checked_mul(cls.members.size(), count(next, remaining - 1)));
        }
        counts_[remaining].insert(state, total);
        return total;
    }

    std::uint64_t count_from_root(unsigned length) {
        if (length == 0) return 1;
        std::vector<std::uint64_t> next(words_);
        std::uint64_t total = 0;
        for (const auto& first : first_) {
            extend(next, root_, classes_[first.cls]);
            total = checked_add(total, checked_mul(first.orbit_size, count(next, length - 1)));
        }
        return total;
    }

    /// Depth-first stream of sequences of the given length. `reduced` restricts the terms
    /// to first-term orbit representatives and class representatives.
    bool stream(unsigned length, bool reduced, const SequenceVisitor& visit) {
        std::vector<Value> terms;
        std::vector<std::vector<std::uint64_t>> states(length + 1, std::vector<std::uint64_t>(words_));
        states[0] = root_;
        if (length == 0) return visit(terms);
        return stream_level(0, length, reduced, terms, states, visit);
    }

    void tick() {
        ++nodes_;
        if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) throw BudgetExceeded{};
        if (budget_.max_time.count() != 0 && (nodes_ & 1023U) == 0 &&
            Clock::now() - start_ > budget_.max_time)
            throw BudgetExceeded{};
    }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    static std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
        if (a > std::numeric_limits<std::uint64_t>::max() - b) fail(ErrorKind::InvalidArgument, "count exceeds 64 bits");
        return a + b;
    }
    static std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
        if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
            fail(ErrorKind::InvalidArgument, "count exceeds 64 bits");
        return a * b;
    }

    // Spans stay valid when the pool grows: the word buffers themselves never move.
    std::span<std::uint64_t> scratch(std::vector<std::vector<std::uint64_t>>& pool, std::size_t depth) {
        while (pool.size() <= depth) pool.emplace_back(words_);
        return pool[depth];
    }

    void note_depth() {
        if (path_.size() > deepest_.size()) deepest_ = path_;
    }

    bool stream_level(unsigned depth, unsigned length, bool reduced, std::vector<Value>& terms,
                      std::vector<std::vector<std::uint64_t>>& states, const SequenceVisitor& visit) {
        const auto& state = states[depth];
        auto& next = states[depth + 1];
        const unsigned remaining = length - depth;
        auto descend = [&](const TermClass& cls, std::span<const Value> choices) {
            if (!legal(state, cls)) return true;
            extend(next, state, cls);
            if (longest(next) + 1 < remaining) return true;
            for (Value y : choices) {
                terms.push_back(y);
                const bool go_on = depth + 1 == length ? visit(terms)
                                                       : stream_level(depth + 1, length, reduced, terms, states, visit);
                terms.pop_back();
                if (!go_on) return false;
            }
            return true;
        };

        if (reduced) {
            if (depth == 0) {
                for (const auto& first : first_) {
                    const Value rep[] = {first.rep};
                    if (!descend(classes_[first.cls], rep)) return false;
                }
            } else {
                for (const auto& cls : classes_) {
                    const Value rep[] = {cls.rep};
                    if (!descend(cls, rep)) return false;
                }
            }
            return true;
        }

        // Lexicographic order over all residues: walk residues, not classes.
        for (Value y = 0; y < n_; ++y) {
            const std::size_t c = class_of(y);
            if (c == npos) continue;
            const Value one[] = {y};
            if (!descend(classes_[c], one)) return false;
        }
        return true;
    }

    std::size_t class_of(Value y) {
        if (class_index_.empty()) {
            class_index_.assign(n_, npos);
            for (std::size_t c = 0; c < classes_.size(); ++c)
                for (Value m : classes_[c].members) class_index_[m] = c;
        }
        return class_index_[y];
    }

    Value n_;
    std::size_t words_;
    SearchBudget budget_;
    std::vector<TermClass> classes_;
    std::vector<FirstTerm> first_;
    std::vector<std::size_t> class_index_;
    std::vector<std::uint64_t> root_;
    StateTable<unsigned> longest_;
    std::vector<StateTable<std::uint64_t>> counts_;
    std::vector<std::vector<std::uint64_t>> scratch_;
    std::vector<std::vector<std::uint64_t>> count_scratch_;
    std::vector<Value> path_;
    std::vector<Value> deepest_;
    std::uint64_t nodes_ = 0;
    Clock::time_point start_;
};

} // namespace

SearchReport compute_constant(const ZnContext& ctx, const WeightSet& weights, SearchBudget budget) {
    const auto start = Clock::now();
    SearchReport report;
    report.n = ctx.modulus();
    report.weights = weights.describe();

    ExtensionSearch search(ctx, weights, budget);
    try {
        const unsigned longest = search.longest_from_root();
        report.status = SearchStatus::Exact;
        report.constant = longest + 1;
        report.lower_bound = report.constant;
        report.witness = Seq(ctx.modulus(), search.least_witness(longest));
    } catch (const BudgetExceeded&) {
        report.status = SearchStatus::Unknown;
        report.witness = Seq(ctx.modulus(), search.deepest());
        report.lower_bound = report.witness.size() + 1;
    }
    report.nodes_visited = search.nodes();
    report.elapsed = Clock::now() - start;
    return report;
}

Enumeration enumerate_extremal(const ZnContext& ctx, const WeightSet& weights, std::uint64_t constant,
                               const EnumerateOptions& options) {
    require(constant >= 1, "constant must be at least 1");
    const auto length = static_cast<unsigned>(constant - 1);
    Enumeration result;
    ExtensionSearch search(ctx, weights, options.budget);

    try {
        if (options.up_to_equivalence) {
            require(weights.is_unit_subgroup(), "equivalence classes need a subgroup of U(n) as weights");
            Canonicalizer canon(weights);
            std::set<Seq> classes;
            search.stream(length, true, [&](std::span<const Value> terms) {
                classes.insert(canon(Seq(ctx.modulus(), {terms.begin(), terms.end()})).canonical);
                return true;
            });
            result.count = classes.size();
            if (!options.count_only) {
                for (const auto& s : classes) {
                    if (options.max_sequences != 0 && result.sequences.size() >= options.max_sequences) {
                        result.truncated = true;
                        break;
                    }
                    result.sequences.push_back(s);
                }
            }
            return result;
        }

        result.count = search.count_from_root(length);
        if (options.count_only) return result;
        search.stream(length, false, [&](std::span<const Value> terms) {
            if (options.max_sequences != 0 && result.sequences.size() >= options.max_sequences) {
                result.truncated = true;
                return false;
            }
            result.sequences.emplace_back(ctx.modulus(), std::vector<Value>(terms.begin(), terms.end()));
            return true;
        });
    } catch (const BudgetExceeded&) {
        result.complete = false;
    }
    return result;
}

bool for_each_zero_window_free(const ZnContext& ctx, const WeightSet& weights, std::size_t length,
                               const SequenceVisitor& visit, SearchBudget budget) {
    ExtensionSearch search(ctx, weights, budget);
    try {
        return search.stream(static_cast<unsigned>(length), false, visit);
    } catch (const BudgetExceeded&) {
        return false;
    }
}

bool for_each_reduced_zero_window_free(const ZnContext& ctx, const WeightSet& weights, std::size_t length,
                                       const SequenceVisitor& visit, SearchBudget budget) {
    ExtensionSearch search(ctx, weights, budget);
    try {
        return search.stream(static_cast<unsigned>(length), true, visit);
    } catch (const BudgetExceeded&) {
        return false;
    }
}

} // namespace zerosum
