#include "zerosum/decompose.hpp"

#include "json.hpp"

#include <algorithm>

namespace zerosum {

namespace {

using ordered = nlohmann::ordered_json;

ordered to_ordered(const Certificate& cert) {
    ordered j;
    j["family"] = to_string(cert.family);
    j["n"] = cert.n;
    j["sequence"] = std::vector<Value>(cert.sequence.terms().begin(), cert.sequence.terms().end());
    if (cert.is_leaf()) {
        j["leaf"] = cert.leaf;
        return j;
    }
    j["prime"] = cert.prime;
    j["middle_positions"] = cert.middle_positions;
    j["connector"] = ordered{{"positions", cert.connector.positions},
                             {"values", cert.connector.values},
                             {"images", cert.connector.images},
                             {"condition", cert.connector.condition}};
    auto alternates = cert.alternate_primes;
    std::sort(alternates.begin(), alternates.end());
    j["alternate_primes"] = alternates;
    auto children = ordered::array();
    for (const auto& child : cert.children) children.push_back(to_ordered(child));
    j["children"] = std::move(children);
    return j;
}

} // namespace

std::string to_json(const Certificate& cert, int indent) { return to_ordered(cert).dump(indent); }

} // namespace zerosum
