#pragma once

// Reproducible random streams.
//
// The generator is std::mt19937_64, whose output sequence is fixed by the
// C++ standard (the 10000th draw from the default seed is
// 9981545732273789042). Integer ranges are produced by rejection sampling
// rather than std::uniform_int_distribution, whose algorithm is
// implementation-defined.

#include <cstdint>
#include <random>
#include <string_view>

#include "errors.hpp"

namespace coprime_lab {

inline constexpr std::string_view generator_name = "mt19937_64";

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for batch `index` of a run seeded with `seed`.
constexpr std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(seed ^ splitmix64(index));
}

class rng_stream {
public:
    explicit rng_stream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, m), m >= 1.
    std::uint64_t below(std::uint64_t m) {
        if (m == 0) throw invalid_input_error("rng_stream::below: empty range");
        // Largest multiple of m representable is 2^64 - (2^64 mod m).
        const std::uint64_t reject_from = -m % m;  // (2^64 - m) mod m == 2^64 mod m
        while (true) {
            const std::uint64_t x = engine_();
            if (x >= reject_from) return x % m;
        }
    }

    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw invalid_input_error("rng_stream::between: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        const std::uint64_t off = span == 0 ? engine_() : below(span);
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + off);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace coprime_lab
