#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <coprime_lab/analytic_constants.hpp>

using namespace coprime_lab;

namespace {

constexpr long double pi = std::numbers::pi_v<long double>;

// Direct summation to M terms plus the integral tail; independent of the
// Euler-Maclaurin path under test.
long double zeta_direct(unsigned k, std::uint64_t M) {
    long double s = 0.0L;
    for (std::uint64_t n = M; n >= 1; --n) s += std::pow(static_cast<long double>(n), -static_cast<long double>(k));
    // sum_{n > M} n^-k lies between the integrals from M+1 and from M
    const long double lo = std::pow(static_cast<long double>(M + 1), 1.0L - k) / (k - 1.0L);
    const long double hi = std::pow(static_cast<long double>(M), 1.0L - k) / (k - 1.0L);
    return s + (lo + hi) / 2.0L;
}

// Published constants are six digits followed by "...": a truncation, so the
// true value lies in [printed, printed + 1e-6).
bool matches_truncated(const constant_value& c, double printed) {
    return c.upper() >= printed && c.lower() < printed + 1e-6;
}

}  // namespace

TEST(Zeta, TwoIsPiSquaredOverSix) {
    const auto z = zeta(2, 1e-12);
    EXPECT_LE(z.abs_error_bound, 1e-12);
    EXPECT_NEAR(z.value, static_cast<double>(pi * pi / 6.0L), 1e-12);
    EXPECT_TRUE(z.brackets(1.6449340668482264));
    EXPECT_EQ(z.method, constant_method::series);
}

TEST(Zeta, ThreeAgainstDirectSummation) {
    const auto z = zeta(3, 1e-12);
    EXPECT_NEAR(z.value, 1.202056903159594, 1e-12);
    EXPECT_NEAR(z.value, static_cast<double>(zeta_direct(3, 10'000'000)), 1e-12);
}

TEST(Zeta, DecreasesTowardOne) {
    double prev = zeta(2, 1e-12).value;
    for (unsigned k = 3; k <= 64; ++k) {
        const double v = zeta(k, 1e-12).value;
        // zeta(k) - 1 ~ 2^-k falls below double resolution past k = 50
        if (k <= 50) {
            ASSERT_LT(v, prev) << k;
            ASSERT_GT(v, 1.0) << k;
        } else {
            ASSERT_LE(v, prev) << k;
            ASSERT_GE(v, 1.0) << k;
        }
        // sum_{n >= 3} n^-k <= 3^-k (1 + 3 / (k - 1))
        if (k <= 40) {
            ASSERT_NEAR(v, 1.0 + std::ldexp(1.0, -static_cast<int>(k)),
                        std::pow(3.0, -static_cast<double>(k)) * (1.0 + 3.0 / (k - 1.0)) + 1e-15);
        }
        prev = v;
    }
}

TEST(Zeta, Errors) {
    EXPECT_THROW(zeta(1, 1e-9), invalid_input_error);
    EXPECT_THROW(zeta(65, 1e-9), invalid_input_error);
    EXPECT_THROW(zeta(2, 1e-15), precision_error);
    EXPECT_THROW(zeta(2, 0.0), invalid_input_error);
}

TEST(InverseZeta, ThreeMatchesPublished) {
    const auto c = inverse_zeta(3, 1e-12);
    EXPECT_NEAR(c.value, 0.8319073725807075, 1e-12);
    EXPECT_LE(c.abs_error_bound, 1e-12);
}

TEST(EulerProduct, FirstFactorBrackets) {
    EXPECT_DOUBLE_EQ(static_cast<double>(euler_product_partial(2)), 0.75);
    const double truth = 6.0 / (std::numbers::pi * std::numbers::pi);
    EXPECT_LT(0.6, truth);
    EXPECT_LT(truth, 0.75);
}

TEST(EulerProduct, PartialProductsAreNestedBrackets) {
    const double truth = 6.0 / (std::numbers::pi * std::numbers::pi);
    long double prev = 1.0L;
    for (std::uint64_t P : {2u, 3u, 5u, 7u, 11u, 100u, 1000u, 100000u}) {
        const long double v = euler_product_partial(P);
        ASSERT_LT(v, prev) << P;
        ASSERT_GT(v, truth) << P;
        prev = v;
    }
}

TEST(EulerProduct, AgreesWithClosedForm) {
    const double closed = static_cast<double>(6.0L / (pi * pi));
    for (double eps : {1e-3, 1e-6, 1e-9}) {
        const auto e = euler_product_inv_zeta2(eps);
        EXPECT_LE(e.abs_error_bound, eps);
        EXPECT_NEAR(e.value, closed, 2 * eps) << eps;
        EXPECT_TRUE(e.brackets(closed)) << eps;
        EXPECT_EQ(e.method, constant_method::euler_product);
    }
}

TEST(EulerProduct, EulerIdentity) {
    for (double eps : {1e-6, 1e-9}) {
        const auto product = euler_product_inv_zeta2(eps);
        const auto series = zeta(2, eps);
        EXPECT_LE(std::fabs(product.value * series.value - 1.0), 4 * eps) << eps;
    }
}

TEST(Catalan, PartialSumBracket) {
    const auto k0 = catalan_partial(0);
    EXPECT_DOUBLE_EQ(k0.value, 1.0);
    EXPECT_NEAR(k0.abs_error_bound, 1.0 / 9.0, 1e-15);
    EXPECT_TRUE(k0.brackets(0.915965594177219));
    for (std::uint64_t K : {1u, 2u, 10u, 1000u}) EXPECT_TRUE(catalan_partial(K).brackets(0.915965594177219)) << K;
}

TEST(Catalan, PublishedDigits) {
    const auto g = catalan(1e-9);
    EXPECT_LE(g.abs_error_bound, 1e-9);
    EXPECT_NEAR(g.value, 0.915965594, 1e-9);
    EXPECT_TRUE(g.brackets(0.915965594177219));
    EXPECT_THROW(catalan(1e-13), precision_error);
    EXPECT_NO_THROW(catalan(0.5));
}

TEST(GaussianConstant, PublishedDigits) {
    const auto c = gaussian_coprime_constant(1e-9);
    EXPECT_NEAR(c.value, 0.663700, 1e-6);
    EXPECT_TRUE(c.brackets(c.value));
    EXPECT_LE(c.abs_error_bound, 1e-9);
}

TEST(PairwiseTriple, FirstFactorIsUpperBracket) {
    EXPECT_NEAR(static_cast<double>(pairwise_triple_partial(2)), static_cast<double>(32.0L / (pi * pi * pi * pi)), 1e-15);
    EXPECT_NEAR(static_cast<double>(pairwise_triple_partial(2)), 0.3285, 1e-4);
    EXPECT_GT(static_cast<double>(pairwise_triple_partial(2)), 0.286747);
}

TEST(PairwiseTriple, PublishedDigits) {
    const auto q = pairwise_triple_constant(1e-6);
    EXPECT_LE(q.abs_error_bound, 1e-6);
    EXPECT_NEAR(q.value, 0.286747, 1e-6);
    EXPECT_TRUE(matches_truncated(q, 0.286747));
    EXPECT_THROW(pairwise_triple_constant(1e-9), precision_error);
}

TEST(Delta, DimensionOneIsInverseZetaTwo) {
    // 1 - (1 - (1 - 1/p))^2 = 1 - p^-2, factor by factor.
    for (std::uint64_t P : {2u, 97u, 100000u})
        EXPECT_NEAR(static_cast<double>(delta_partial(1, P)), static_cast<double>(euler_product_partial(P)), 1e-15);
    const auto d1 = delta_determinant_constant(1, 1e-8);
    const auto e = euler_product_inv_zeta2(1e-8);
    EXPECT_EQ(d1.params.at("P"), e.params.at("P"));
    EXPECT_NEAR(d1.value, e.value, 1e-12);
    EXPECT_TRUE(d1.brackets(0.6079271018540267));
}

TEST(Delta, LimitPublishedDigits) {
    const auto d = delta_determinant_constant(std::nullopt, 1e-6);
    EXPECT_LE(d.abs_error_bound, 1e-6);
    EXPECT_NEAR(d.value, 0.353236, 5e-6);
    EXPECT_TRUE(matches_truncated(d, 0.353236));
}

TEST(Delta, DecreasingInDimension) {
    double prev = 1.0;
    for (unsigned n = 1; n <= 12; ++n) {
        const double v = delta_determinant_constant(n, 1e-6).value;
        ASSERT_LT(v, prev) << n;
        prev = v;
    }
    const double limit = delta_determinant_constant(std::nullopt, 1e-6).value;
    EXPECT_GT(prev, limit);
    // Delta(n) - Delta(inf) shrinks like 2^-n; within 1e-3 from n = 10 on.
    EXPECT_GT(delta_determinant_constant(4, 1e-6).value - limit, 1e-2);
    EXPECT_LT(delta_determinant_constant(10, 1e-6).value - limit, 1e-3);
}

TEST(Delta, Errors) {
    EXPECT_THROW(delta_determinant_constant(0, 1e-6), invalid_input_error);
    EXPECT_THROW(delta_determinant_constant(501, 1e-6), invalid_input_error);
    EXPECT_THROW(delta_determinant_constant(3, 1e-9), precision_error);
}

TEST(ReferenceConstant, Routing) {
    EXPECT_NEAR(reference_constant(experiment::odd_pair).value, 0.810569, 1e-6);
    EXPECT_EQ(reference_constant(experiment::prime_density).value, 0.0);
    EXPECT_NEAR(reference_constant(experiment::pair).value, 0.607927, 1e-6);
    EXPECT_NEAR(reference_constant(experiment::ktuple, 3).value, 0.831907, 1e-6);
    EXPECT_NEAR(reference_constant(experiment::gcd_eq, 2).value, 0.607927101854 / 4, 1e-12);
    EXPECT_NEAR(reference_constant(experiment::triple3).value, 0.286747, 1e-6);
    EXPECT_NEAR(reference_constant(experiment::gaussian).value, 0.663700, 1e-6);
    EXPECT_NEAR(reference_constant(experiment::det).value, 0.353236, 1e-6);
    EXPECT_THROW(reference_constant(experiment::gcd_eq, 0), invalid_input_error);
}

// Every constant agrees with the published six-digit truncations.
TEST(ReferenceConstant, PublishedDigitsMatch) {
    EXPECT_TRUE(matches_truncated(euler_product_inv_zeta2(1e-7), 0.607927));
    EXPECT_TRUE(matches_truncated(eight_over_pi_squared(), 0.810569));
    EXPECT_TRUE(matches_truncated(catalan(1e-7), 0.915965));
    // 0.6637008046...: rounding would print 0.663701
    EXPECT_TRUE(matches_truncated(gaussian_coprime_constant(1e-7), 0.663700));
    EXPECT_FALSE(matches_truncated(gaussian_coprime_constant(1e-7), 0.663701));
    EXPECT_TRUE(matches_truncated(pairwise_triple_constant(1e-7), 0.286747));
    EXPECT_TRUE(matches_truncated(delta_determinant_constant(std::nullopt, 1e-7), 0.353236));
}
