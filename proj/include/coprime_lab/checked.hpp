#pragma once

// Checked 128-bit arithmetic. Every exact count in the library flows through
// these helpers so that overflow surfaces as an error instead of wrapping.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace coprime_lab {

using u128 = unsigned __int128;
using i128 = __int128;

template <typename T>
concept wide_integral = std::integral<T> || std::same_as<T, u128> || std::same_as<T, i128>;

namespace checked {

template <wide_integral T>
constexpr T add(T a, T b, std::string_view what = "addition") {
    T r{};
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error(std::string(what) + " overflows");
    return r;
}

template <wide_integral T>
constexpr T sub(T a, T b, std::string_view what = "subtraction") {
    T r{};
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error(std::string(what) + " overflows");
    return r;
}

template <wide_integral T>
constexpr T mul(T a, T b, std::string_view what = "multiplication") {
    T r{};
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error(std::string(what) + " overflows");
    return r;
}

template <wide_integral T>
constexpr T pow(T base, unsigned exp, std::string_view what = "power") {
    T r = 1;
    for (unsigned i = 0; i < exp; ++i) r = mul(r, base, what);
    return r;
}

/// Narrowing conversion that refuses to lose information.
template <wide_integral To, wide_integral From>
constexpr To narrow(From v, std::string_view what = "narrowing") {
    To r{};
    if (__builtin_add_overflow(v, From{0}, &r)) throw overflow_error(std::string(what) + " overflows");
    return r;
}

}  // namespace checked

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

inline std::string to_string(i128 v) {
    if (v >= 0) return to_string(static_cast<u128>(v));
    // -(v+1)+1 avoids negating the minimum value
    return "-" + to_string(static_cast<u128>(-(v + 1)) + 1);
}

/// n(n-1)/2 with overflow checking.
inline u128 pair_count(u128 n) {
    if (n < 2) return 0;
    const u128 a = (n % 2 == 0) ? n / 2 : n;
    const u128 b = (n % 2 == 0) ? n - 1 : (n - 1) / 2;
    return checked::mul(a, b, "n(n-1)/2");
}

template <std::unsigned_integral T>
constexpr T gcd(T a, T b) noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    const int shift = __builtin_ctzll(static_cast<unsigned long long>(a | b));
    a >>= __builtin_ctzll(static_cast<unsigned long long>(a));
    do {
        b >>= __builtin_ctzll(static_cast<unsigned long long>(b));
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

/// Euclid on unsigned 128-bit values; gcd(a, 0) = a.
constexpr u128 gcd(u128 a, u128 b) noexcept {
    while (b != 0) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace coprime_lab
