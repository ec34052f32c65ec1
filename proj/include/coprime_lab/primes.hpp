#pragma once

// Segmented sieve of Eratosthenes for walking primes in ascending order far
// beyond what the full multiplicative tables can hold. Used by the prime
// products in analytic_constants.hpp.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace coprime_lab {

/// Largest bound for_each_prime accepts.
inline constexpr std::uint64_t max_product_prime = 4'000'000'000;

namespace detail {

inline std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
    std::vector<bool> composite(std::size_t{limit} + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace detail

/// Calls fn(p) for every prime p <= limit, ascending.
template <typename Fn>
void for_each_prime(std::uint64_t limit, Fn&& fn) {
    if (limit > max_product_prime)
        throw resource_limit_error("prime bound " + std::to_string(limit) + " exceeds maximum " +
                                   std::to_string(max_product_prime));
    if (limit < 2) return;
    fn(std::uint64_t{2});

    auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit)));
    while (std::uint64_t{root + 1} * (root + 1) <= limit) ++root;
    const auto base = detail::small_primes(root);

    // Odd numbers only: slot j of a segment starting at odd `lo` is lo + 2j.
    constexpr std::uint64_t segment_slots = 1u << 18;
    std::vector<char> composite(segment_slots);
    std::vector<std::uint64_t> next(base.size());  // next odd multiple to strike, per base prime
    for (std::size_t i = 0; i < base.size(); ++i) next[i] = std::uint64_t{base[i]} * base[i];

    for (std::uint64_t lo = 3; lo <= limit; lo += 2 * segment_slots) {
        const std::uint64_t hi = std::min(limit, lo + 2 * segment_slots - 1);  // inclusive
        const std::uint64_t slots = (hi - lo) / 2 + 1;
        std::fill_n(composite.begin(), slots, 0);
        for (std::size_t i = 1; i < base.size(); ++i) {  // skip 2
            const std::uint64_t step = 2 * std::uint64_t{base[i]};
            std::uint64_t m = next[i];
            for (; m <= hi; m += step) composite[(m - lo) / 2] = 1;
            next[i] = m;
        }
        for (std::uint64_t j = 0; j < slots; ++j)
            if (!composite[j]) fn(lo + 2 * j);
    }
}

}  // namespace coprime_lab
