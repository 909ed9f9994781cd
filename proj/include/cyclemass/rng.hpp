#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace cyclemass {

/// Counter-based generator: value i of stream `key` is a pure function of
/// (key, i), so sampling is reproducible across platforms and independent of
/// how work is sharded over threads.
struct CounterRng {
    std::uint64_t key;

    explicit CounterRng(std::uint64_t k) : key(k) {}

    static std::uint64_t mix(std::uint64_t k, std::uint64_t counter) {
        std::uint64_t z = k + counter * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t bits(std::uint64_t counter) const { return mix(key, counter); }

    /// Uniform in [0, 1).
    double uniform01(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1p-53;
    }

    /// Uniform in (0, 1); never returns an exact endpoint.
    double uniform_open(std::uint64_t counter) const {
        return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1p-53;
    }

    /// Standard exponential draw, always finite and positive.
    double exponential(std::uint64_t counter) const {
        return -std::log(uniform_open(counter));
    }
};

/// FNV-1a, for deriving stream keys from graph6 strings.
inline std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

} // namespace cyclemass
