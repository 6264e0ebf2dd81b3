#include "family_cache.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace zerosum::detail {

namespace {

template <class Key, class V, class Make>
const V& memo(std::map<Key, std::unique_ptr<V>>& table, std::shared_mutex& mutex, const Key& key, Make make) {
    {
        std::shared_lock lock(mutex);
        if (auto it = table.find(key); it != table.end()) return *it->second;
    }
    auto value = std::make_unique<V>(make());
    std::unique_lock lock(mutex);
    auto [it, inserted] = table.try_emplace(key, std::move(value));
    return *it->second;
}

} // namespace

const WeightSet& cached_unit_powers(Value n, unsigned j) {
    static std::map<std::pair<Value, unsigned>, std::unique_ptr<WeightSet>> table;
    static std::shared_mutex mutex;
    return memo(table, mutex, std::pair{n, j}, [&] {
        return j == 0 ? WeightSet::one(n) : WeightSet::units_pow(ZnContext(n), j);
    });
}

std::uint64_t cached_formula_constant(Family family, Value n) {
    static std::map<std::pair<Family, Value>, std::unique_ptr<std::uint64_t>> table;
    static std::shared_mutex mutex;
    return memo(table, mutex, std::pair{family, n}, [&] { return formula_constant(family, ZnContext(n)); });
}

} // namespace zerosum::detail
