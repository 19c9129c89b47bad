#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace netsr {

using NodeId = std::int32_t;
using Rng = std::mt19937_64;

/// Problems caused by caller input: bad node ids, malformed files,
/// out-of-range configuration. The CLI maps these to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generator-syntax errors. Carries the byte offset of the offending token.
struct ParseError : InputError {
    ParseError(const std::string& msg, std::size_t at)
        : InputError(msg + " (at byte " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

inline std::size_t rand_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline double rand_unit(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace netsr
