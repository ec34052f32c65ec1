#pragma once

// Gaussian integers a + bi with Euclidean division and gcd.
//
// Coordinates are 64-bit; products and norms are formed in 128 bits and
// every step is overflow-checked.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "checked.hpp"
#include "errors.hpp"

namespace coprime_lab {

struct gaussian_int {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend constexpr bool operator==(const gaussian_int&, const gaussian_int&) = default;

    constexpr bool is_zero() const noexcept { return re == 0 && im == 0; }

    friend std::string to_string(const gaussian_int& z) {
        return std::to_string(z.re) + (z.im < 0 ? "" : "+") + std::to_string(z.im) + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, const gaussian_int& z) { return os << to_string(z); }
};

inline constexpr gaussian_int gaussian_units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

inline u128 norm(const gaussian_int& z) {
    const i128 a = z.re;
    const i128 b = z.im;
    return static_cast<u128>(a * a) + static_cast<u128>(b * b);
}

inline gaussian_int conj(const gaussian_int& z) {
    return {z.re, checked::sub(std::int64_t{0}, z.im, "conjugate")};
}

inline gaussian_int operator*(const gaussian_int& z, const gaussian_int& w) {
    const i128 re = checked::sub(checked::mul<i128>(z.re, w.re), checked::mul<i128>(z.im, w.im));
    const i128 im = checked::add(checked::mul<i128>(z.re, w.im), checked::mul<i128>(z.im, w.re));
    return {checked::narrow<std::int64_t>(re, "gaussian product"), checked::narrow<std::int64_t>(im, "gaussian product")};
}

inline gaussian_int operator+(const gaussian_int& z, const gaussian_int& w) {
    return {checked::add(z.re, w.re, "gaussian sum"), checked::add(z.im, w.im, "gaussian sum")};
}

inline gaussian_int operator-(const gaussian_int& z, const gaussian_int& w) {
    return {checked::sub(z.re, w.re, "gaussian difference"), checked::sub(z.im, w.im, "gaussian difference")};
}

namespace detail {

// Nearest integer to num/den (den > 0), ties to even.
inline i128 round_div_even(i128 num, i128 den) {
    i128 q = num / den;
    i128 r = num % den;
    if (r < 0) {  // floor division
        q -= 1;
        r += den;
    }
    const i128 twice = 2 * r;
    if (twice > den || (twice == den && (q & 1) != 0)) q += 1;
    return q;
}

}  // namespace detail

struct gaussian_divmod {
    gaussian_int quotient;
    gaussian_int remainder;
};

/// z = q w + r with q the coordinate-wise rounding of z conj(w) / N(w), so
/// N(r) <= N(w) / 2.
inline gaussian_divmod div_round(const gaussian_int& z, const gaussian_int& w) {
    if (w.is_zero()) throw invalid_input_error("div_round: division by zero");
    const i128 n = static_cast<i128>(norm(w));
    // z * conj(w) = (a + bi)(c - di) = (ac + bd) + (bc - ad) i
    const i128 num_re = checked::add(checked::mul<i128>(z.re, w.re), checked::mul<i128>(z.im, w.im), "div_round");
    const i128 num_im = checked::sub(checked::mul<i128>(z.im, w.re), checked::mul<i128>(z.re, w.im), "div_round");
    const gaussian_int q{checked::narrow<std::int64_t>(detail::round_div_even(num_re, n), "div_round quotient"),
                         checked::narrow<std::int64_t>(detail::round_div_even(num_im, n), "div_round quotient")};
    return {q, z - q * w};
}

/// The associate with re > 0 and im >= 0; zero maps to zero.
inline gaussian_int canonical(gaussian_int z) {
    if (z.is_zero()) return z;
    for (int turn = 0; turn < 4; ++turn) {
        if (z.re > 0 && z.im >= 0) return z;
        z = z * gaussian_units[1];
    }
    throw internal_error("canonical: no first-quadrant associate");
}

/// Canonical gcd by the Euclidean algorithm. `steps`, if given, receives the
/// number of division steps.
inline gaussian_int gcd(gaussian_int z, gaussian_int w, unsigned* steps = nullptr) {
    if (z.is_zero() && w.is_zero()) throw invalid_input_error("gcd(0, 0) is undefined");
    unsigned count = 0;
    while (!w.is_zero()) {
        gaussian_int r = div_round(z, w).remainder;
        z = w;
        w = r;
        ++count;
    }
    if (steps) *steps = count;
    return canonical(z);
}

inline bool is_coprime(const gaussian_int& z, const gaussian_int& w) { return norm(gcd(z, w)) == 1; }

}  // namespace coprime_lab
