#pragma once

/**
 * @file analytic_constants.hpp
 * @brief Limiting densities with certified absolute error bounds.
 *
 * Every function returns a constant_value whose interval
 * [value - abs_error_bound, value + abs_error_bound] contains the true
 * constant. Bounds are the sum of a truncation term and a floating-point
 * accumulation term; sums and products run in long double.
 *
 * Prime-product tails use the Rosser-Schoenfeld inequality
 * pi(x) < 1.25506 x / ln x (x > 1). Partial summation gives
 *
 *     sum_{p > P} p^-2  <=  2 * 1.25506 / (P ln P),
 *
 * which is what makes eps = 1e-9 reachable with P in the low 10^8 range.
 */

#include <cfloat>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "errors.hpp"
#include "experiment.hpp"
#include "primes.hpp"

namespace coprime_lab {

enum class constant_method { series, euler_product, alternating_series, closed_form };

constexpr std::string_view to_string(constant_method m) noexcept {
    switch (m) {
        case constant_method::series: return "series";
        case constant_method::euler_product: return "euler_product";
        case constant_method::alternating_series: return "alternating_series";
        case constant_method::closed_form: return "closed_form";
    }
    return "unknown";
}

struct constant_value {
    double value = 0.0;
    double abs_error_bound = 0.0;
    constant_method method = constant_method::closed_form;
    std::map<std::string, std::uint64_t> params;  ///< truncation bounds used

    double lower() const noexcept { return value - abs_error_bound; }
    double upper() const noexcept { return value + abs_error_bound; }
    bool brackets(double x) const noexcept { return lower() <= x && x <= upper(); }
};

/// Tightest tolerance any routine here accepts.
inline constexpr double min_constant_eps = 1e-14;

/// Default tolerance for reference constants attached to density results.
inline constexpr double default_reference_eps = 1e-9;

namespace detail {

inline constexpr long double pi_ld = std::numbers::pi_v<long double>;

// Rounding a long double result to double.
inline double to_double_bound(long double v) { return static_cast<double>(std::fabs(v)) * 0x1p-52; }

// Accumulated rounding of `ops` long double operations on a quantity of size |v|.
inline long double accumulation_bound(std::uint64_t ops, long double v) {
    return static_cast<long double>(ops) * 4.0L * LDBL_EPSILON * std::fabs(v);
}

inline void require_eps(double eps, double min_eps, const char* what) {
    if (!(eps > 0.0)) throw invalid_input_error(std::string(what) + ": eps must be positive");
    if (eps < min_eps)
        throw precision_error(std::string(what) + ": eps " + std::to_string(eps) + " below supported minimum " +
                              std::to_string(min_eps));
}

// Upper bound on sum_{p > P} p^-2.
inline long double prime_square_tail(std::uint64_t P) {
    const auto x = static_cast<long double>(P);
    return 2.0L * 1.25506L / (x * std::log(x));
}

// Upper bound on sum_{p > P} -log(1 - c/p^2), valid while c/P^2 < 1.
inline long double log_tail(std::uint64_t P, long double c) {
    const auto x = static_cast<long double>(P);
    return c * prime_square_tail(P) / (1.0L - c / (x * x));
}

// Smallest P >= 10 with log_tail(P, c) <= target.
inline std::uint64_t choose_prime_bound(long double target, long double c) {
    std::uint64_t hi = 10;
    while (log_tail(hi, c) > target) {
        if (hi > max_product_prime)
            throw resource_limit_error("prime product needs a bound above " + std::to_string(max_product_prime));
        hi *= 2;
    }
    std::uint64_t lo = hi / 2 < 10 ? 10 : hi / 2;
    if (log_tail(lo, c) <= target) return lo;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (log_tail(mid, c) <= target ? hi : lo) = mid;
    }
    if (hi > max_product_prime)
        throw resource_limit_error("prime product needs bound " + std::to_string(hi) + " above maximum " +
                                   std::to_string(max_product_prime));
    return hi;
}

struct product_run {
    long double product = 1.0L;
    std::uint64_t factors = 0;
};

template <typename Factor>
product_run prime_product(std::uint64_t P, Factor&& factor) {
    product_run run;
    for_each_prime(P, [&](std::uint64_t p) {
        run.product *= factor(p);
        ++run.factors;
    });
    return run;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Zeta values
// ---------------------------------------------------------------------------

/// zeta(k) by Euler-Maclaurin: sum_{n<M} n^-k + M^(1-k)/(k-1) + M^-k/2.
/// The remainder lies between 0 and k M^(-k-1) / 12.
inline constant_value zeta(unsigned k, double eps) {
    if (k < 2 || k > 64) throw invalid_input_error("zeta: k must be in [2, 64]");
    detail::require_eps(eps, min_constant_eps, "zeta");

    const long double kk = k;
    auto remainder = [&](std::uint64_t M) {
        return kk * std::pow(static_cast<long double>(M), -kk - 1.0L) / 12.0L;
    };
    auto M = static_cast<std::uint64_t>(std::ceil(std::pow(kk / (3.0L * eps), 1.0L / (kk + 1.0L))));
    if (M < 2) M = 2;
    while (remainder(M) > eps / 4.0L) ++M;

    long double sum = 0.0L;
    for (std::uint64_t n = M - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -kk);
    const long double m = static_cast<long double>(M);
    const long double v = sum + std::pow(m, 1.0L - kk) / (kk - 1.0L) + std::pow(m, -kk) / 2.0L;

    constant_value out;
    out.value = static_cast<double>(v);
    out.abs_error_bound = static_cast<double>(remainder(M) + detail::accumulation_bound(2 * M + 8, v)) +
                          detail::to_double_bound(v);
    out.method = constant_method::series;
    out.params = {{"k", k}, {"M", M}};
    return out;
}

/// 1/zeta(k) with the bound propagated through the reciprocal.
inline constant_value inverse_zeta(unsigned k, double eps) {
    const constant_value z = zeta(k, eps / 2.0);
    const long double zv = z.value;
    const long double zb = z.abs_error_bound;
    const long double v = 1.0L / zv;
    constant_value out;
    out.value = static_cast<double>(v);
    out.abs_error_bound = static_cast<double>(zb / (zv * (zv - zb))) + detail::to_double_bound(v);
    out.method = constant_method::series;
    out.params = z.params;
    return out;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

inline constant_value closed_form(long double v) {
    constant_value out;
    out.value = static_cast<double>(v);
    out.abs_error_bound = 2.0 * detail::to_double_bound(v);
    out.method = constant_method::closed_form;
    return out;
}

inline constant_value six_over_pi_squared() { return closed_form(6.0L / (detail::pi_ld * detail::pi_ld)); }
inline constant_value eight_over_pi_squared() { return closed_form(8.0L / (detail::pi_ld * detail::pi_ld)); }

// ---------------------------------------------------------------------------
// Euler product for 1/zeta(2)
// ---------------------------------------------------------------------------

/// prod_{p <= P} (1 - p^-2), no tail handling. Nested brackets: each extra
/// prime lowers the value.
inline long double euler_product_partial(std::uint64_t P) {
    return detail::prime_product(P, [](std::uint64_t p) {
               const long double x = static_cast<long double>(p);
               return 1.0L - 1.0L / (x * x);
           })
        .product;
}

inline constant_value euler_product_inv_zeta2(double eps) {
    detail::require_eps(eps, min_constant_eps, "euler_product_inv_zeta2");
    const std::uint64_t P = detail::choose_prime_bound(eps / 2.0L, 1.0L);
    const auto run = detail::prime_product(P, [](std::uint64_t p) {
        const long double x = static_cast<long double>(p);
        return 1.0L - 1.0L / (x * x);
    });
    const long double tail = detail::log_tail(P, 1.0L);
    constant_value out;
    out.value = static_cast<double>(run.product);
    out.abs_error_bound = static_cast<double>(run.product * tail +
                                              detail::accumulation_bound(2 * run.factors + 2, run.product)) +
                          detail::to_double_bound(run.product);
    out.method = constant_method::euler_product;
    out.params = {{"P", P}, {"primes", run.factors}};
    return out;
}

// ---------------------------------------------------------------------------
// Catalan's constant
// ---------------------------------------------------------------------------

/// Partial sum S_K = sum_{k=0}^{K} (-1)^k/(2k+1)^2 with the alternating-series
/// bound 1/(2K+3)^2.
inline constant_value catalan_partial(std::uint64_t K) {
    long double s = 0.0L;
    for (std::uint64_t i = K + 1; i-- > 0;) {
        const long double d = 2.0L * static_cast<long double>(i) + 1.0L;
        s += (i % 2 == 0 ? 1.0L : -1.0L) / (d * d);
    }
    const long double next = 1.0L / ((2.0L * K + 3.0L) * (2.0L * K + 3.0L));
    constant_value out;
    out.value = static_cast<double>(s);
    out.abs_error_bound = static_cast<double>(next + detail::accumulation_bound(3 * K + 6, 1.0L)) +
                          detail::to_double_bound(s);
    out.method = constant_method::alternating_series;
    out.params = {{"K", K}};
    return out;
}

/// Catalan's constant. The true value lies between S_K and S_{K+1}; we report
/// their midpoint, so the bound is half the first omitted term.
inline constant_value catalan(double eps) {
    detail::require_eps(eps, 1e-12, "catalan");
    const long double k_est = std::ceil((1.0L / std::sqrt(static_cast<long double>(eps)) - 3.0L) / 2.0L);
    auto K = static_cast<std::uint64_t>(std::max(k_est, 0.0L));
    auto term = [](std::uint64_t i) {
        const long double d = 2.0L * static_cast<long double>(i) + 1.0L;
        return 1.0L / (d * d);
    };
    while (term(K + 1) / 2.0L > eps / 2.0L) ++K;

    long double s = 0.0L;
    for (std::uint64_t i = K + 1; i-- > 0;) s += (i % 2 == 0 ? 1.0L : -1.0L) * term(i);
    const long double next = term(K + 1);
    const long double v = s + ((K + 1) % 2 == 0 ? 0.5L : -0.5L) * next;

    constant_value out;
    out.value = static_cast<double>(v);
    out.abs_error_bound = static_cast<double>(next / 2.0L + detail::accumulation_bound(3 * K + 6, 1.0L)) +
                          detail::to_double_bound(v);
    out.method = constant_method::alternating_series;
    out.params = {{"K", K}};
    return out;
}

/// Density of coprime pairs of Gaussian integers, 6 / (pi^2 G).
inline constant_value gaussian_coprime_constant(double eps) {
    const constant_value g = catalan(std::max(eps / 2.0, 1e-12));
    const long double gv = g.value;
    const long double gb = g.abs_error_bound;
    const long double c = 6.0L / (detail::pi_ld * detail::pi_ld);
    const long double v = c / gv;
    constant_value out;
    out.value = static_cast<double>(v);
    out.abs_error_bound = static_cast<double>(c * gb / (gv * (gv - gb)) + detail::accumulation_bound(4, v)) +
                          detail::to_double_bound(v);
    out.method = constant_method::alternating_series;
    out.params = g.params;
    return out;
}

// ---------------------------------------------------------------------------
// Pairwise coprimality of three integers
// ---------------------------------------------------------------------------

inline constexpr double min_product_eps = 1e-8;

/// (36/pi^4) prod_{p <= P} (1 - 1/(p+1)^2), no tail handling.
inline long double pairwise_triple_partial(std::uint64_t P) {
    const long double pi2 = detail::pi_ld * detail::pi_ld;
    return 36.0L / (pi2 * pi2) * detail::prime_product(P, [](std::uint64_t p) {
                                     const long double x = static_cast<long double>(p) + 1.0L;
                                     return 1.0L - 1.0L / (x * x);
                                 }).product;
}

inline constant_value pairwise_triple_constant(double eps) {
    detail::require_eps(eps, min_product_eps, "pairwise_triple_constant");
    // (p+1)^-2 < p^-2, so the 1/zeta(2) tail bound covers this product too.
    const std::uint64_t P = detail::choose_prime_bound(eps / 2.0L, 1.0L);
    const auto run = detail::prime_product(P, [](std::uint64_t p) {
        const long double x = static_cast<long double>(p) + 1.0L;
        return 1.0L - 1.0L / (x * x);
    });
    const long double pi2 = detail::pi_ld * detail::pi_ld;
    const long double v = 36.0L / (pi2 * pi2) * run.product;
    constant_value out;
    out.value = static_cast<double>(v);
    out.abs_error_bound =
        static_cast<double>(v * detail::log_tail(P, 1.0L) + detail::accumulation_bound(2 * run.factors + 8, v)) +
        detail::to_double_bound(v);
    out.method = constant_method::euler_product;
    out.params = {{"P", P}, {"primes", run.factors}};
    return out;
}

// ---------------------------------------------------------------------------
// Coprimality of determinants of random integer matrices
// ---------------------------------------------------------------------------

/// Largest finite matrix dimension accepted by delta_determinant_constant.
inline constexpr unsigned max_delta_dim = 500;

namespace detail {

struct delta_run {
    long double product = 1.0L;
    long double inner_rel = 0.0L;  // bound on log(truncated / true) from inner truncation
    std::uint64_t factors = 0;
    std::uint64_t inner_terms = 0;
};

// prod_{p <= P} [1 - (1 - prod_{k=1}^{K_p} (1 - p^-k))^2] where K_p = dim, cut
// short once p^-k drops below `cut`.
inline delta_run delta_product(std::optional<unsigned> dim, std::uint64_t P, long double cut) {
    delta_run run;
    for_each_prime(P, [&](std::uint64_t p) {
        const long double inv = 1.0L / static_cast<long double>(p);
        long double inner = 1.0L;
        long double power = 1.0L;
        unsigned k = 0;
        bool truncated = false;
        while (true) {
            if (dim && k == *dim) break;
            power *= inv;
            inner *= 1.0L - power;
            ++k;
            if (power < cut) {
                truncated = !dim || k < *dim;
                break;
            }
        }
        const long double one_minus = 1.0L - inner;
        const long double factor = 1.0L - one_minus * one_minus;
        if (truncated) {
            // Omitted inner factors shrink `inner` by at most power/(p-1);
            // d factor / d inner = 2(1 - inner) <= 2/(p-1).
            const long double pm1 = static_cast<long double>(p) - 1.0L;
            const long double d_factor = 2.0L * power / (pm1 * pm1);
            run.inner_rel += d_factor / (factor - d_factor);
        }
        run.product *= factor;
        run.inner_terms += k;
        ++run.factors;
    });
    return run;
}

// 1 - factor = (1 - inner)^2 <= c / p^2 with c = 1 for dim 1 and
// (p/(p-1))^2 <= (P/(P-1))^2 otherwise.
inline long double delta_tail_coefficient(std::optional<unsigned> dim, std::uint64_t P) {
    if (dim && *dim == 1) return 1.0L;
    const long double x = static_cast<long double>(P);
    return (x / (x - 1.0L)) * (x / (x - 1.0L));
}

}  // namespace detail

/// Delta(dim) truncated at primes <= P, no tail handling. nullopt means dim -> infinity.
inline long double delta_partial(std::optional<unsigned> dim, std::uint64_t P, double eps = 1e-12) {
    return detail::delta_product(dim, P, static_cast<long double>(eps) * 1e-3L).product;
}

inline constant_value delta_determinant_constant(std::optional<unsigned> dim, double eps) {
    if (dim && (*dim == 0 || *dim > max_delta_dim))
        throw invalid_input_error("delta: dimension must be in [1, " + std::to_string(max_delta_dim) + "] or inf");
    detail::require_eps(eps, min_product_eps, "delta_determinant_constant");

    // Bisect with the coefficient for P=10 (the largest); recompute for the chosen P.
    const std::uint64_t P = detail::choose_prime_bound(eps / 2.0L, detail::delta_tail_coefficient(dim, 10));
    const long double cut = static_cast<long double>(eps) * 1e-3L;
    const auto run = detail::delta_product(dim, P, cut);
    const long double rel = detail::log_tail(P, detail::delta_tail_coefficient(dim, P)) + run.inner_rel;

    constant_value out;
    out.value = static_cast<double>(run.product);
    out.abs_error_bound =
        static_cast<double>(run.product * rel +
                            detail::accumulation_bound(3 * run.inner_terms + 4 * run.factors, run.product)) +
        detail::to_double_bound(run.product);
    out.method = constant_method::euler_product;
    out.params = {{"P", P}, {"primes", run.factors}, {"dim", dim ? *dim : 0}};
    return out;
}

// ---------------------------------------------------------------------------
// Routing
// ---------------------------------------------------------------------------

/// Limit constant for an experiment. `order` carries k for ktuple, j for
/// kfree, t for gcd-eq and the matrix dimension for det (0 = infinity).
/// Results are cached; the first call for a product-based kind walks primes.
inline constant_value reference_constant(experiment kind, unsigned order = 0) {
    static std::mutex mutex;
    static std::map<std::pair<experiment, unsigned>, constant_value> cache;
    {
        std::scoped_lock lock(mutex);
        if (auto it = cache.find({kind, order}); it != cache.end()) return it->second;
    }

    constant_value c;
    switch (kind) {
        case experiment::pair:
        case experiment::squarefree:
        case experiment::visible:
        case experiment::fgcd: c = six_over_pi_squared(); break;
        case experiment::odd_pair: c = eight_over_pi_squared(); break;
        case experiment::gcd_eq: {
            if (order == 0) throw invalid_input_error("gcd-eq reference needs t >= 1");
            const long double t2 = static_cast<long double>(order) * order;
            c = closed_form(6.0L / (detail::pi_ld * detail::pi_ld) / t2);
            break;
        }
        case experiment::ktuple:
        case experiment::kfree: c = inverse_zeta(order, default_reference_eps); break;
        case experiment::triple3: c = pairwise_triple_constant(std::max(default_reference_eps, min_product_eps)); break;
        case experiment::prime_density: c = closed_form(0.0L); break;
        case experiment::gaussian: c = gaussian_coprime_constant(default_reference_eps); break;
        case experiment::det:
            c = delta_determinant_constant(order == 0 ? std::nullopt : std::optional<unsigned>(order),
                                           std::max(default_reference_eps, min_product_eps));
            break;
        default: throw invalid_input_error("no reference constant for experiment");
    }
    std::scoped_lock lock(mutex);
    cache.emplace(std::pair{kind, order}, c);
    return c;
}

}  // namespace coprime_lab
