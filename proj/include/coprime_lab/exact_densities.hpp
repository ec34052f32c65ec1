#pragma once

/**
 * @file exact_densities.hpp
 * @brief Exact finite-N coprimality counts.
 *
 * Each operation returns an exact rational numerator/denominator. Where two
 * counting routes exist (totient summation and Moebius inversion) both are
 * evaluated and a mismatch raises internal_error.
 *
 * Conventions: gcd(a, 0) = a. Pairs are unordered with i < k; tuples are
 * ordered with repetition. The bridge between the two is
 *
 *     #{(i, k) in [1,n]^2 : gcd = 1} = 2 Phi(n) - 1.
 */

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "analytic_constants.hpp"
#include "checked.hpp"
#include "experiment.hpp"
#include "function_spec.hpp"
#include "sieve.hpp"
#include "totient.hpp"

namespace coprime_lab {

struct density_result {
    experiment kind = experiment::pair;
    std::uint64_t n = 0;      ///< range bound N, radius R or x
    std::uint64_t order = 0;  ///< t (gcd-eq), k (ktuple) or j (kfree); 0 otherwise
    u128 numerator = 0;
    u128 denominator = 1;
    double value = 0.0;
    std::optional<double> reference;
    std::optional<double> abs_gap;
};

/// Largest n pairwise_coprime_triple_count enumerates by default.
inline constexpr std::uint64_t default_triple_bound = 2000;

/// kfree_count cross-checks against a direct sieve up to this n.
inline constexpr std::uint64_t kfree_oracle_limit = 1'000'000;

namespace detail {

inline density_result make_result(experiment kind, std::uint64_t n, std::uint64_t order, u128 numerator,
                                  u128 denominator, bool with_reference) {
    density_result r;
    r.kind = kind;
    r.n = n;
    r.order = order;
    r.numerator = numerator;
    r.denominator = denominator;
    r.value = static_cast<double>(static_cast<long double>(numerator) / static_cast<long double>(denominator));
    if (with_reference) {
        r.reference = reference_constant(kind, static_cast<unsigned>(order)).value;
        r.abs_gap = std::fabs(r.value - *r.reference);
    }
    return r;
}

inline void require_in_sieve(const sieve_tables& t, std::uint64_t n, const char* what) {
    if (n > t.limit())
        throw resource_limit_error(std::string(what) + ": n = " + std::to_string(n) + " exceeds sieve limit " +
                                   std::to_string(t.limit()));
}

/// Largest r with r^j <= n.
inline std::uint64_t integer_root(std::uint64_t n, unsigned j) {
    auto fits = [&](std::uint64_t r) {
        u128 acc = 1;
        for (unsigned i = 0; i < j; ++i) {
            acc *= r;
            if (acc > n) return false;
        }
        return true;
    };
    auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / j));
    while (r > 0 && !fits(r)) --r;
    while (fits(r + 1)) ++r;
    return r;
}

inline std::uint64_t isqrt(std::uint64_t v) { return integer_root(v, 2); }

}  // namespace detail

// ---------------------------------------------------------------------------

/// Phi(n) = sum_{k <= n} phi(k).
inline u128 totient_sum(const totient_summator& phi_sum, std::uint64_t n) { return phi_sum(n); }

/// sum_{d <= n} mu(d) floor(n/d)^2, the Moebius count of ordered coprime pairs in [1,n]^2.
inline i128 mobius_pair_sum(const sieve_tables& t, std::uint64_t n) {
    detail::require_in_sieve(t, n, "mobius_pair_sum");
    const auto mu = t.mu_table();
    i128 acc = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (mu[d] == 0) continue;
        const i128 q = static_cast<i128>(n / d);
        acc = checked::add(acc, mu[d] * checked::mul(q, q), "mobius pair sum");
    }
    return acc;
}

/// |A_n| / |B_n|: unordered pairs i < k <= n with gcd(i, k) = 1.
inline density_result coprime_pair_count(const totient_summator& phi_sum, std::uint64_t n,
                                         bool with_reference = true) {
    if (n < 2) throw invalid_input_error("coprime_pair_count: n must be >= 2");
    const u128 phi = phi_sum(n);
    if (n <= phi_sum.tables().limit()) {
        const i128 mobius = mobius_pair_sum(phi_sum.tables(), n);
        if (mobius != checked::sub(checked::mul(i128{2}, static_cast<i128>(phi)), i128{1}))
            throw internal_error("Moebius and totient routes disagree at n = " + std::to_string(n));
    }
    return detail::make_result(experiment::pair, n, 0, phi - 1, pair_count(n), with_reference);
}

/// Pairs i < k <= n with gcd exactly t. Equal to |A_{floor(n/t)}| via (i, k) = t (i', k').
inline density_result gcd_equal_count(const totient_summator& phi_sum, std::uint64_t n, std::uint64_t t,
                                      bool with_reference = true) {
    if (n < 2) throw invalid_input_error("gcd_equal_count: n must be >= 2");
    if (t < 1) throw invalid_input_error("gcd_equal_count: t must be >= 1");
    const std::uint64_t m = n / t;
    const u128 numerator = m >= 2 ? phi_sum(m) - 1 : 0;
    return detail::make_result(experiment::gcd_eq, n, t, numerator, pair_count(n), with_reference);
}

/// Ordered k-tuples in [1,n]^k with gcd 1: sum_d mu(d) floor(n/d)^k.
inline density_result ktuple_coprime_count(const sieve_tables& t, std::uint64_t n, unsigned k,
                                           bool with_reference = true) {
    if (k < 2 || k > 10) throw invalid_input_error("ktuple_coprime_count: k must be in [2, 10]");
    if (n < 1) throw invalid_input_error("ktuple_coprime_count: n must be >= 1");
    detail::require_in_sieve(t, n, "ktuple_coprime_count");
    const i128 denominator = checked::pow(static_cast<i128>(n), k, "n^k");
    const auto mu = t.mu_table();
    i128 acc = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (mu[d] == 0) continue;
        acc = checked::add(acc, mu[d] * checked::pow(static_cast<i128>(n / d), k, "ktuple term"), "ktuple sum");
    }
    return detail::make_result(experiment::ktuple, n, k, static_cast<u128>(acc), static_cast<u128>(denominator),
                               with_reference);
}

/// Ordered triples in [1,n]^3 that are pairwise coprime, by enumeration.
///
/// Row a is a bitset of the c in [1,n] coprime to a; for each coprime (a, b)
/// the admissible c are popcount(row[a] & row[b]).
inline density_result pairwise_coprime_triple_count(std::uint64_t n, std::uint64_t bound = default_triple_bound,
                                                    bool with_reference = true) {
    if (n < 1) throw invalid_input_error("pairwise_coprime_triple_count: n must be >= 1");
    if (n > bound)
        throw resource_limit_error("pairwise_coprime_triple_count: n = " + std::to_string(n) +
                                   " exceeds the enumeration bound " + std::to_string(bound) +
                                   "; use the Monte Carlo estimator");
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(words * (n + 1), 0);
    for (std::uint64_t a = 1; a <= n; ++a)
        for (std::uint64_t c = 1; c <= n; ++c)
            if (gcd(a, c) == 1) rows[a * words + (c - 1) / 64] |= std::uint64_t{1} << ((c - 1) % 64);

    u128 count = 0;
    for (std::uint64_t a = 1; a <= n; ++a) {
        const std::uint64_t* ra = &rows[a * words];
        for (std::uint64_t b = 1; b <= n; ++b) {
            if (!((ra[(b - 1) / 64] >> ((b - 1) % 64)) & 1)) continue;
            const std::uint64_t* rb = &rows[b * words];
            std::uint64_t pc = 0;
            for (std::size_t w = 0; w < words; ++w) pc += static_cast<std::uint64_t>(std::popcount(ra[w] & rb[w]));
            count += pc;
        }
    }
    const u128 denominator = checked::pow(static_cast<u128>(n), 3, "n^3");
    return detail::make_result(experiment::triple3, n, 0, count, denominator, with_reference);
}

/// Unordered pairs of odd i < k <= n with gcd 1.
///
/// Totient route: for odd k >= 3, i -> k - i swaps parity and preserves
/// coprimality, so exactly phi(k)/2 of the i < k coprime to k are odd.
/// Moebius route: sum over odd d of mu(d) * ceil(floor(n/d)/2)^2 counts the
/// ordered pairs; subtract the diagonal (1,1) and halve.
inline density_result odd_coprime_pair_count(const sieve_tables& t, std::uint64_t n, bool with_reference = true) {
    if (n < 3) throw invalid_input_error("odd_coprime_pair_count: n must be >= 3");
    detail::require_in_sieve(t, n, "odd_coprime_pair_count");
    const auto phi = t.phi_table();
    const auto mu = t.mu_table();
    u128 by_totient = 0;
    i128 ordered = 0;
    for (std::uint64_t k = 1; k <= n; k += 2) {
        if (k >= 3) by_totient += phi[k] / 2;
        if (mu[k] != 0) {
            const i128 odd_multiples = static_cast<i128>((n / k + 1) / 2);
            ordered = checked::add(ordered, mu[k] * checked::mul(odd_multiples, odd_multiples), "odd pair sum");
        }
    }
    if (static_cast<u128>((ordered - 1) / 2) != by_totient)
        throw internal_error("odd pair routes disagree at n = " + std::to_string(n));
    const std::uint64_t m = (n + 1) / 2;
    return detail::make_result(experiment::odd_pair, n, 0, by_totient, pair_count(m), with_reference);
}

/// Integers m <= n not divisible by any j-th power of a prime:
/// sum_{d <= n^(1/j)} mu(d) floor(n / d^j). For n <= kfree_oracle_limit a
/// direct sieve over [1, n] is run as a cross-check.
inline density_result kfree_count(const sieve_tables& t, std::uint64_t n, unsigned j, bool with_reference = true) {
    if (j < 2 || j > 16) throw invalid_input_error("kfree_count: j must be in [2, 16]");
    if (n < 1) throw invalid_input_error("kfree_count: n must be >= 1");
    const std::uint64_t root = detail::integer_root(n, j);
    detail::require_in_sieve(t, root, "kfree_count");
    const auto mu = t.mu_table();
    i128 acc = 0;
    for (std::uint64_t d = 1; d <= root; ++d) {
        if (mu[d] == 0) continue;
        const auto dj = static_cast<std::uint64_t>(checked::pow(static_cast<u128>(d), j));
        acc += mu[d] * static_cast<i128>(n / dj);
    }
    const auto count = static_cast<u128>(acc);

    if (n <= kfree_oracle_limit) {
        std::vector<bool> hit(n + 1, false);
        for (const std::uint32_t p : t.primes()) {
            if (p > root) break;
            const auto pj = static_cast<std::uint64_t>(checked::pow(static_cast<u128>(p), j));
            for (std::uint64_t m = pj; m <= n; m += pj) hit[m] = true;
        }
        const auto direct = static_cast<u128>(std::count(hit.begin() + 1, hit.end(), false));
        if (direct != count) throw internal_error("kfree routes disagree at n = " + std::to_string(n));
    }
    const experiment kind = j == 2 ? experiment::squarefree : experiment::kfree;
    return detail::make_result(kind, n, j, count, n, with_reference);
}

inline density_result squarefree_count(const sieve_tables& t, std::uint64_t n, bool with_reference = true) {
    return kfree_count(t, n, 2, with_reference);
}

/// Lattice points 0 < x^2 + y^2 <= R^2 and the visible ones among them
/// (gcd(|x|, |y|) = 1). Scans the quadrant x >= 1, y >= 0 and multiplies by
/// four: rotation by 90 degrees maps it onto the other three and preserves gcd.
inline density_result visible_points_in_disk(std::uint64_t radius, bool with_reference = true) {
    if (radius < 1) throw invalid_input_error("visible_points_in_disk: radius must be >= 1");
    const std::uint64_t r2 = checked::mul(radius, radius, "radius^2");
    u128 total = 0;
    u128 visible = 0;
    for (std::uint64_t x = 1; x <= radius; ++x) {
        const std::uint64_t y_max = detail::isqrt(r2 - x * x);
        total += y_max + 1;
        if (x == 1) ++visible;  // y = 0 axis point; gcd(x, 0) = x
        for (std::uint64_t y = 1; y <= y_max; ++y)
            if (gcd(x, y) == 1) ++visible;
    }
    return detail::make_result(experiment::visible, radius, 0, 4 * visible, 4 * total, with_reference);
}

/// m <= n with gcd(m, floor(f(m))) = 1; floor(f(m)) = 0 counts only for m = 1.
inline density_result f_gcd_density(std::uint64_t n, const function_spec& f, bool with_reference = true) {
    if (n < 1) throw invalid_input_error("f_gcd_density: n must be >= 1");
    u128 hits = 0;
    for (std::uint64_t m = 1; m <= n; ++m)
        if (gcd(m, f.floor_at(m)) == 1) ++hits;
    return detail::make_result(experiment::fgcd, n, 0, hits, n, with_reference);
}

/// pi(x) / x.
inline density_result prime_density(const sieve_tables& t, std::uint64_t x, bool with_reference = true) {
    if (x < 1) throw invalid_input_error("prime_density: x must be >= 1");
    return detail::make_result(experiment::prime_density, x, 0, prime_count(t, x), x, with_reference);
}

}  // namespace coprime_lab
