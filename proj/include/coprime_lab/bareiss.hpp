#pragma once

/*
 * Fraction-free (Bareiss) determinant of a square integer matrix.
 *
 * Step k replaces every trailing entry by
 *
 *     a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / a[k-1][k-1]
 *
 * and the division is always exact, so after n-1 steps the last pivot is
 * the determinant. Intermediate entries are minors of the input, which keeps
 * them bounded by Hadamard's inequality; the products before division are
 * roughly squares of those minors and drive the width requirement.
 *
 * determinant() first runs in checked __int128 and reruns in checked 256-bit
 * integers only if that overflows.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "checked.hpp"
#include "errors.hpp"

namespace coprime_lab {

using i256 = boost::multiprecision::checked_int256_t;

namespace detail {

template <typename T>
struct wide_ops;

template <>
struct wide_ops<i128> {
    static i128 from(std::int64_t v) { return v; }
    static i128 step(i128 a, i128 pivot, i128 b, i128 c, i128 prev) {
        return checked::sub(checked::mul(a, pivot, "bareiss"), checked::mul(b, c, "bareiss"), "bareiss") / prev;
    }
    static i128 to_i128(i128 v) { return v; }
};

template <>
struct wide_ops<i256> {
    static i256 from(std::int64_t v) { return i256(v); }
    static i256 step(const i256& a, const i256& pivot, const i256& b, const i256& c, const i256& prev) {
        try {
            return (a * pivot - b * c) / prev;
        } catch (const std::overflow_error&) {
            throw overflow_error("bareiss: 256-bit overflow");
        }
    }
    static i128 to_i128(const i256& v) {
        // |v| < 2^127
        static const i256 limit = i256(1) << 127;
        if (v >= limit || v <= -limit) throw overflow_error("determinant exceeds 128 bits");
        const bool negative = v < 0;
        i256 mag = negative ? i256(-v) : v;
        const auto lo = static_cast<std::uint64_t>(mag & i256(0xFFFFFFFFFFFFFFFFULL));
        const auto hi = static_cast<std::uint64_t>(mag >> 64);
        const i128 r = static_cast<i128>((static_cast<u128>(hi) << 64) | lo);
        return negative ? -r : r;
    }
};

}  // namespace detail

/// Determinant of the row-major n x n matrix `entries` computed in type Wide
/// (i128 or i256). Row swaps are used when a pivot vanishes.
template <typename Wide>
i128 bareiss_determinant(std::span<const std::int64_t> entries, std::size_t n) {
    using ops = detail::wide_ops<Wide>;
    if (entries.size() != n * n) throw invalid_input_error("bareiss_determinant: entries must hold n*n values");
    if (n == 0) return 1;
    std::vector<Wide> a(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) a[i] = ops::from(entries[i]);
    auto at = [&](std::size_t r, std::size_t c) -> Wide& { return a[r * n + c]; };

    bool negate = false;
    Wide prev = ops::from(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) = ops::step(at(i, j), at(k, k), at(i, k), at(k, j), prev);
        }
        prev = at(k, k);
    }
    const i128 det = ops::to_i128(at(n - 1, n - 1));
    return negate ? -det : det;
}

/// Exact determinant; widens to 256 bits on 128-bit overflow.
inline i128 determinant(std::span<const std::int64_t> entries, std::size_t n) {
    try {
        return bareiss_determinant<i128>(entries, n);
    } catch (const overflow_error&) {
        return bareiss_determinant<i256>(entries, n);
    }
}

}  // namespace coprime_lab
