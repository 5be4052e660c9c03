#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lwlab {

/// Outcome of one verification instance. `params` keeps insertion order so
/// serialized reports are stable.
struct CheckResult {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    bool asserted = true;  // informational-only cases set this to false
    uint64_t lhs_hash = 0;
    uint64_t rhs_hash = 0;
    long long elapsed_ms = 0;

    CheckResult& with(const std::string& key, long long value) {
        params.emplace_back(key, std::to_string(value));
        return *this;
    }
    CheckResult& with(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
        return *this;
    }
};

inline bool all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (r.asserted && !r.pass) return false;
    return true;
}

}  // namespace lwlab
