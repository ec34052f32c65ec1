#pragma once

/**
 * @file monte_carlo.hpp
 * @brief Seeded coprimality estimators with Wilson 95% intervals.
 *
 * Trials are cut into batches of batch_size; batch b draws from
 * rng_stream(batch_seed(seed, b)). Successes are an integer sum over
 * batches, so a run is reproducible from (seed, params, trials) regardless
 * of how many threads execute it.
 *
 * Sampling models are explicit parameters: integers uniform on [1, M],
 * Gaussian integers with coordinates uniform on [-B, B] (origin redrawn),
 * matrix entries uniform on [0, M) or, with symmetric entries, on
 * [-(M-1), M-1].
 */

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bareiss.hpp"
#include "checked.hpp"
#include "experiment.hpp"
#include "gaussian.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace coprime_lab {

inline constexpr double wilson_z95 = 1.959964;

struct mc_estimate {
    experiment kind = experiment::pair;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    std::map<std::string, std::int64_t> params;
    std::string generator{generator_name};
};

struct mc_options {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/// Wilson score interval, clamped to [0, 1].
inline std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                                 double z = wilson_z95) {
    if (trials == 0) throw invalid_input_error("wilson_interval: trials must be >= 1");
    if (successes > trials) throw invalid_input_error("wilson_interval: successes exceed trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    double low = std::max(0.0, centre - half);
    double high = std::min(1.0, centre + half);
    // The score interval contains p; enforce it against rounding.
    low = std::min(low, p);
    high = std::max(high, p);
    if (successes == 0) low = 0.0;
    if (successes == trials) high = 1.0;
    return {low, high};
}

namespace detail {

inline void require_trials(const mc_options& opt) {
    if (opt.trials == 0) throw invalid_input_error("Monte Carlo: trials must be >= 1");
}

inline mc_estimate finish(experiment kind, std::uint64_t successes, const mc_options& opt,
                          std::map<std::string, std::int64_t> params) {
    mc_estimate e;
    e.kind = kind;
    e.successes = successes;
    e.trials = opt.trials;
    e.estimate = static_cast<double>(successes) / static_cast<double>(opt.trials);
    std::tie(e.ci_low, e.ci_high) = wilson_interval(successes, opt.trials);
    e.seed = opt.seed;
    e.params = std::move(params);
    return e;
}

// Runs `trial(rng) -> bool` over all batches.
template <typename Trial>
std::uint64_t count_successes(const mc_options& opt, Trial trial) {
    return sum_over_batches(opt.trials, opt.threads, [&](std::uint64_t batch, std::uint64_t n) {
        rng_stream rng(batch_seed(opt.seed, batch));
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < n; ++i) hits += trial(rng) ? 1 : 0;
        return hits;
    });
}

}  // namespace detail

/// Ordered pairs (i, k) uniform on [1, M]^2; success iff gcd(i, k) = 1.
/// The exact target is (2 Phi(M) - 1) / M^2.
inline mc_estimate estimate_coprime_pair(std::uint64_t range_max, const mc_options& opt) {
    if (range_max < 1) throw invalid_input_error("estimate_coprime_pair: range_max must be >= 1");
    detail::require_trials(opt);
    const auto hits = detail::count_successes(opt, [&](rng_stream& rng) {
        const std::uint64_t i = rng.below(range_max) + 1;
        const std::uint64_t k = rng.below(range_max) + 1;
        return gcd(i, k) == 1;
    });
    return detail::finish(experiment::pair, hits, opt, {{"range_max", static_cast<std::int64_t>(range_max)}});
}

/// Ordered triples uniform on [1, M]^3; success iff pairwise coprime.
inline mc_estimate estimate_pairwise_triple(std::uint64_t range_max, const mc_options& opt) {
    if (range_max < 1) throw invalid_input_error("estimate_pairwise_triple: range_max must be >= 1");
    detail::require_trials(opt);
    const auto hits = detail::count_successes(opt, [&](rng_stream& rng) {
        const std::uint64_t a = rng.below(range_max) + 1;
        const std::uint64_t b = rng.below(range_max) + 1;
        const std::uint64_t c = rng.below(range_max) + 1;
        return gcd(a, b) == 1 && gcd(a, c) == 1 && gcd(b, c) == 1;
    });
    return detail::finish(experiment::triple3, hits, opt, {{"range_max", static_cast<std::int64_t>(range_max)}});
}

/// Nonzero Gaussian integer with coordinates uniform on [-B, B].
inline gaussian_int sample_gaussian_in_box(rng_stream& rng, std::int64_t half_width) {
    while (true) {
        const gaussian_int z{rng.between(-half_width, half_width), rng.between(-half_width, half_width)};
        if (!z.is_zero()) return z;
    }
}

/// Coprimality of two independent draws from `sampler(rng) -> gaussian_int`.
template <typename Sampler>
mc_estimate estimate_gaussian_coprime_with(Sampler sampler, const mc_options& opt,
                                           std::map<std::string, std::int64_t> params = {}) {
    detail::require_trials(opt);
    const auto hits = detail::count_successes(opt, [&](rng_stream& rng) {
        const gaussian_int z = sampler(rng);
        const gaussian_int w = sampler(rng);
        return is_coprime(z, w);
    });
    return detail::finish(experiment::gaussian, hits, opt, std::move(params));
}

inline mc_estimate estimate_gaussian_coprime(std::int64_t box_half_width, const mc_options& opt) {
    if (box_half_width < 1) throw invalid_input_error("estimate_gaussian_coprime: box half-width must be >= 1");
    if (box_half_width > (std::int64_t{1} << 31))
        throw resource_limit_error("estimate_gaussian_coprime: box half-width above 2^31");
    return estimate_gaussian_coprime_with(
        [box_half_width](rng_stream& rng) { return sample_gaussian_in_box(rng, box_half_width); }, opt,
        {{"box", box_half_width}});
}

inline constexpr unsigned max_det_dim = 8;

/// Two independent dim x dim integer matrices per trial; success iff
/// gcd(|det A|, |det B|) = 1 (so a zero determinant succeeds only against +-1).
inline mc_estimate estimate_det_coprime(unsigned dim, std::uint64_t entry_max, const mc_options& opt,
                                        bool symmetric_entries = false) {
    if (dim < 1 || dim > max_det_dim) throw invalid_input_error("estimate_det_coprime: dim must be in [1, 8]");
    if (entry_max < 2) throw invalid_input_error("estimate_det_coprime: entry_max must be >= 2");
    if (entry_max > (std::uint64_t{1} << 62)) throw invalid_input_error("estimate_det_coprime: entry_max too large");
    detail::require_trials(opt);
    const std::size_t cells = std::size_t{dim} * dim;
    const auto m = static_cast<std::int64_t>(entry_max);
    const auto hits = detail::count_successes(opt, [&](rng_stream& rng) {
        std::int64_t buf[2 * max_det_dim * max_det_dim];
        for (std::size_t i = 0; i < 2 * cells; ++i)
            buf[i] = symmetric_entries ? rng.between(-(m - 1), m - 1) : rng.between(0, m - 1);
        i128 d1 = 0;
        i128 d2 = 0;
        try {
            d1 = determinant({buf, cells}, dim);
            d2 = determinant({buf + cells, cells}, dim);
        } catch (const overflow_error&) {
            throw overflow_error("determinant overflow for dim = " + std::to_string(dim) +
                                 ", entry_max = " + std::to_string(entry_max));
        }
        const u128 a = static_cast<u128>(d1 < 0 ? -d1 : d1);
        const u128 b = static_cast<u128>(d2 < 0 ? -d2 : d2);
        return gcd(a, b) == 1;
    });
    return detail::finish(experiment::det, hits, opt,
                          {{"dim", dim}, {"entry_max", m}, {"symmetric", symmetric_entries ? 1 : 0}});
}

}  // namespace coprime_lab
