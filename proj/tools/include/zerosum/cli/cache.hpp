#pragma once

#include "zerosum/ring.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace zerosum::cli {

/// One line of the cache file.
struct CacheEntry {
    Value n = 0;
    std::string weights;
    std::uint64_t constant = 0;
    std::vector<Value> witness;
    std::string timestamp;
    std::string version;
};

/// Append-only JSON-lines store of computed constants. Unreadable lines are skipped.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

    /// Latest entry for (n, weights), if any.
    [[nodiscard]] std::optional<CacheEntry> find(Value n, const std::string& weights) const;
    void append(const CacheEntry& entry) const;
    [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }
    /// Lines skipped during the last find().
    [[nodiscard]] std::size_t skipped_lines() const noexcept { return skipped_; }

private:
    std::filesystem::path path_;
    mutable std::size_t skipped_ = 0;
};

/// --cache wins over $ZEROSUM_CACHE; neither means no caching.
[[nodiscard]] std::optional<std::filesystem::path> resolve_cache_path(const std::optional<std::string>& flag);

[[nodiscard]] std::string utc_timestamp();

} // namespace zerosum::cli
