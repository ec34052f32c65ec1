#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include <coprime_lab/gaussian.hpp>

using namespace coprime_lab;

namespace {

bool divides(const gaussian_int& d, const gaussian_int& z) { return div_round(z, d).remainder.is_zero(); }

std::vector<gaussian_int> box(std::int64_t r) {
    std::vector<gaussian_int> out;
    for (std::int64_t a = -r; a <= r; ++a)
        for (std::int64_t b = -r; b <= r; ++b) out.push_back({a, b});
    return out;
}

}  // namespace

TEST(Gaussian, NormIsMultiplicative) {
    for (const auto& z : box(6))
        for (const auto& w : box(6)) ASSERT_EQ(norm(z * w), norm(z) * norm(w));
    EXPECT_EQ(norm({0, 0}), 0u);
    EXPECT_EQ(norm({3, -4}), 25u);
}

TEST(Gaussian, DivRoundExamples) {
    const gaussian_int z{7, -3};
    const auto unit = div_round(z, {1, 0});
    EXPECT_EQ(unit.quotient, z);
    EXPECT_TRUE(unit.remainder.is_zero());

    const auto five = div_round({5, 0}, {2, -1});
    EXPECT_EQ(five.quotient, (gaussian_int{2, 1}));
    EXPECT_EQ(five.remainder, (gaussian_int{0, 0}));

    EXPECT_THROW(div_round(z, {0, 0}), invalid_input_error);
}

TEST(Gaussian, DivRoundTiesToEven) {
    // (1 + 0i) / 2 = 0.5 -> 0 ; (3 + 0i) / 2 = 1.5 -> 2 ; (-1) / 2 = -0.5 -> 0
    EXPECT_EQ(div_round({1, 0}, {2, 0}).quotient, (gaussian_int{0, 0}));
    EXPECT_EQ(div_round({3, 0}, {2, 0}).quotient, (gaussian_int{2, 0}));
    EXPECT_EQ(div_round({-1, 0}, {2, 0}).quotient, (gaussian_int{0, 0}));
    EXPECT_EQ(div_round({0, 5}, {2, 0}).quotient, (gaussian_int{0, 2}));
}

TEST(Gaussian, RemainderNormContractExhaustive) {
    const auto values = box(20);
    for (const auto& z : values)
        for (const auto& w : values) {
            if (w.is_zero()) continue;
            const auto [q, r] = div_round(z, w);
            ASSERT_EQ(q * w + r, z);
            ASSERT_LE(2 * norm(r), norm(w)) << z << " / " << w;
        }
}

TEST(Gaussian, GcdExamples) {
    EXPECT_EQ(gcd({3, -4}, {0, 0}), canonical({3, -4}));
    EXPECT_EQ(gcd({0, 0}, {0, -2}), (gaussian_int{2, 0}));
    EXPECT_EQ(gcd({5, 0}, {3, 1}), (gaussian_int{1, 2}));
    EXPECT_EQ(gcd({1, 1}, {1, -1}), (gaussian_int{1, 1}));
    EXPECT_THROW(gcd({0, 0}, {0, 0}), invalid_input_error);
}

TEST(Gaussian, Coprimality) {
    for (const auto& w : box(5)) {
        if (w.is_zero()) continue;
        ASSERT_TRUE(is_coprime({1, 0}, w));
    }
    EXPECT_FALSE(is_coprime({2, 0}, {1, 1}));
    EXPECT_FALSE(is_coprime({3, 1}, {5, 0}));
    EXPECT_TRUE(is_coprime({3, 0}, {2, 1}));
    EXPECT_THROW(is_coprime({0, 0}, {0, 0}), invalid_input_error);
}

TEST(Gaussian, CanonicalAssociateIsUnique) {
    for (const auto& g : box(8)) {
        if (g.is_zero()) continue;
        int hits = 0;
        for (const auto& u : gaussian_units) {
            const auto a = u * g;
            if (a.re > 0 && a.im >= 0) ++hits;
            ASSERT_EQ(canonical(a), canonical(g));
        }
        ASSERT_EQ(hits, 1) << g;
    }
    EXPECT_EQ(canonical({0, 0}), (gaussian_int{0, 0}));
}

// gcd divides both arguments, and every common divisor of small norm
// (found by brute force) divides the gcd.
TEST(Gaussian, GcdIsGreatestCommonDivisor) {
    std::vector<gaussian_int> small_divisors;
    for (const auto& d : box(10))
        if (!d.is_zero() && norm(d) <= 100) small_divisors.push_back(d);
    const auto values = box(10);
    for (std::size_t i = 0; i < values.size(); i += 3)
        for (std::size_t j = 0; j < values.size(); j += 5) {
            const auto& z = values[i];
            const auto& w = values[j];
            if (z.is_zero() && w.is_zero()) continue;
            const auto g = gcd(z, w);
            ASSERT_TRUE(g.re > 0 && g.im >= 0);
            ASSERT_TRUE(divides(g, z)) << z << " " << w;
            ASSERT_TRUE(divides(g, w)) << z << " " << w;
            for (const auto& d : small_divisors) {
                if (divides(d, z) && divides(d, w)) {
                    ASSERT_TRUE(divides(d, g)) << d << " " << z << " " << w;
                }
            }
        }
}

TEST(Gaussian, SymmetryAndUnitInvariance) {
    for (const auto& z : box(7))
        for (const auto& w : box(7)) {
            if (z.is_zero() && w.is_zero()) continue;
            const auto g = gcd(z, w);
            ASSERT_EQ(g, gcd(w, z));
            for (const auto& u : gaussian_units) ASSERT_EQ(g, gcd(u * z, w));
        }
}

TEST(Gaussian, EuclideanStepBound) {
    const auto values = box(25);
    for (std::size_t i = 0; i < values.size(); i += 7)
        for (std::size_t j = 0; j < values.size(); j += 3) {
            const auto& z = values[i];
            const auto& w = values[j];
            if (z.is_zero() || w.is_zero()) continue;
            unsigned steps = 0;
            (void)gcd(z, w, &steps);
            const double min_norm = static_cast<double>(std::min(norm(z), norm(w)));
            ASSERT_LE(steps, 2.0 * std::log2(min_norm) + 4.0) << z << " " << w;
        }
}

TEST(Gaussian, LargeCoordinatesAndOverflow) {
    const std::int64_t big = std::int64_t{1} << 31;
    const gaussian_int z{big, big - 1};
    const gaussian_int w{big - 3, -big};
    const auto g = gcd(z, w);
    EXPECT_TRUE(divides(g, z));
    EXPECT_TRUE(divides(g, w));
    const gaussian_int huge{std::int64_t{1} << 62, std::int64_t{1} << 62};
    EXPECT_THROW(huge * huge, overflow_error);
}
