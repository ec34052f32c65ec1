#pragma once

/**
 * @file sieve.hpp
 * @brief Linear sieve for the Moebius function, Euler's totient and the
 *        smallest prime factor.
 *
 * A single O(N) pass (each composite is crossed off exactly once, by its
 * smallest prime factor) fills all three tables. The tables are immutable
 * after construction and can be read concurrently.
 *
 * Memory: 1 byte (mu) + 4 bytes (phi) + 4 bytes (spf) per index, plus the
 * prime list, i.e. about 9.3 bytes per index.
 */

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace coprime_lab {

/// Largest limit build_sieve accepts. phi and spf are stored as uint32.
inline constexpr std::uint64_t max_sieve_limit = 1'000'000'000;

class sieve_tables {
public:
    /// Number of indices covered; valid arguments are 1..limit().
    std::uint32_t limit() const noexcept { return limit_; }

    int mu(std::uint32_t n) const { return mu_[check(n)]; }
    std::uint32_t phi(std::uint32_t n) const { return phi_[check(n)]; }

    /// Smallest prime factor, defined for n >= 2.
    std::uint32_t spf(std::uint32_t n) const {
        if (n < 2) throw out_of_range_error("spf is defined for n >= 2");
        return spf_[check(n)];
    }

    /// All primes <= limit(), ascending.
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }

    // Raw 0-offset views; element 0 is a placeholder so that index n is n.
    std::span<const std::int8_t> mu_table() const noexcept { return mu_; }
    std::span<const std::uint32_t> phi_table() const noexcept { return phi_; }

    /// Distinct prime factors of n in ascending order.
    std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t n) const {
        check(n);
        std::vector<std::uint32_t> out;
        while (n > 1) {
            const std::uint32_t p = spf_[n];
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
        return out;
    }

private:
    friend sieve_tables build_sieve(std::uint64_t limit);

    std::uint32_t check(std::uint32_t n) const {
        if (n == 0 || n > limit_)
            throw out_of_range_error("index " + std::to_string(n) + " outside sieve range [1, " +
                                     std::to_string(limit_) + "]");
        return n;
    }

    std::uint32_t limit_ = 0;
    std::vector<std::int8_t> mu_;
    std::vector<std::uint32_t> phi_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

inline sieve_tables build_sieve(std::uint64_t limit) {
    if (limit == 0) throw resource_limit_error("sieve limit must be at least 1");
    if (limit > max_sieve_limit)
        throw resource_limit_error("sieve limit " + std::to_string(limit) + " exceeds maximum " +
                                   std::to_string(max_sieve_limit));

    const auto n_max = static_cast<std::uint32_t>(limit);
    sieve_tables t;
    t.limit_ = n_max;
    t.mu_.assign(std::size_t{n_max} + 1, 0);
    t.phi_.assign(std::size_t{n_max} + 1, 0);
    t.spf_.assign(std::size_t{n_max} + 1, 0);
    t.mu_[1] = 1;
    t.phi_[1] = 1;

    for (std::uint32_t i = 2; i <= n_max; ++i) {
        if (t.spf_[i] == 0) {
            t.spf_[i] = i;
            t.mu_[i] = -1;
            t.phi_[i] = i - 1;
            t.primes_.push_back(i);
        }
        const std::uint32_t spf_i = t.spf_[i];
        for (const std::uint32_t p : t.primes_) {
            const std::uint64_t m = std::uint64_t{p} * i;
            if (p > spf_i || m > n_max) break;
            const auto mi = static_cast<std::uint32_t>(m);
            t.spf_[mi] = p;
            if (p == spf_i) {
                // p^2 | m
                t.mu_[mi] = 0;
                t.phi_[mi] = t.phi_[i] * p;
            } else {
                t.mu_[mi] = static_cast<std::int8_t>(-t.mu_[i]);
                t.phi_[mi] = t.phi_[i] * (p - 1);
            }
        }
    }
    return t;
}

/// pi(x): number of primes <= x. Requires x <= tables.limit().
inline std::uint64_t prime_count(const sieve_tables& tables, std::uint64_t x) {
    if (x > tables.limit())
        throw out_of_range_error("prime_count(" + std::to_string(x) + ") exceeds sieve limit " +
                                 std::to_string(tables.limit()));
    const auto primes = tables.primes();
    return static_cast<std::uint64_t>(std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
}

}  // namespace coprime_lab
