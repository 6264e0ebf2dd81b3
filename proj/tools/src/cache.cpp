#include "zerosum/cli/cache.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

namespace zerosum::cli {

std::optional<CacheEntry> ResultCache::find(Value n, const std::string& weights) const {
    skipped_ = 0;
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    std::optional<CacheEntry> found;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            CacheEntry e;
            e.n = j.at("n").get<Value>();
            e.weights = j.at("weights").get<std::string>();
            e.constant = j.at("constant").get<std::uint64_t>();
            e.witness = j.at("witness").get<std::vector<Value>>();
            e.timestamp = j.value("timestamp", "");
            e.version = j.value("version", "");
            if (e.n == n && e.weights == weights) found = std::move(e);
        } catch (const nlohmann::json::exception&) {
            ++skipped_;
        }
    }
    return found;
}

void ResultCache::append(const CacheEntry& entry) const {
    nlohmann::ordered_json j;
    j["n"] = entry.n;
    j["weights"] = entry.weights;
    j["constant"] = entry.constant;
    j["witness"] = entry.witness;
    j["timestamp"] = entry.timestamp;
    j["version"] = entry.version;
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << '\n';
}

std::optional<std::filesystem::path> resolve_cache_path(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return std::filesystem::path(*flag);
    if (const char* env = std::getenv("ZEROSUM_CACHE"); env != nullptr && *env != '\0')
        return std::filesystem::path(env);
    return std::nullopt;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace zerosum::cli
