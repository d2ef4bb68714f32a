#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "duorat/errors.hpp"

namespace duorat {

// Enumeration guards keep interactive use at desk scale. DUORAT_GUARD=<n>
// replaces every default cap at once (expert use).
inline std::int64_t guard_override() {
    static const std::int64_t value = [] {
        const char* env = std::getenv("DUORAT_GUARD");
        if (env == nullptr || *env == '\0') return std::int64_t{-1};
        return static_cast<std::int64_t>(std::strtoll(env, nullptr, 10));
    }();
    return value;
}

inline std::int64_t guard_cap(std::int64_t default_cap) {
    const std::int64_t ov = guard_override();
    return ov > 0 ? ov : default_cap;
}

inline void guard_check(std::int64_t requested, std::int64_t default_cap, const std::string& what) {
    const std::int64_t cap = guard_cap(default_cap);
    if (requested > cap) {
        throw_error(errc::range_too_large,
                    what + " = " + std::to_string(requested) + " exceeds guard " + std::to_string(cap));
    }
}

namespace guards {
// Default caps; see README for the knob.
inline constexpr std::int64_t kWork = 10'000'000;       // per-axis spans, enumeration work
inline constexpr std::int64_t kOracleN = 300;           // brute_best_duo denominator bound
inline constexpr std::int64_t kSweepQ = 5000;           // conj2 full-c sweep modulus cap
inline constexpr std::int64_t kSieve = 100'000'000;     // largest prime endpoint
inline constexpr std::int64_t kCharTable = 1'000'000;   // character table modulus
inline constexpr std::int64_t kOrthoQ = 10'000;         // orthogonality full check modulus
inline constexpr std::int64_t kFactor = 1'000'000'000'000;  // trial-division factoring bound
}  // namespace guards

}  // namespace duorat
