#include <gtest/gtest.h>

#include <vector>

#include <coprime_lab/bareiss.hpp>
#include <coprime_lab/rng.hpp>

using namespace coprime_lab;

namespace {

// Laplace expansion along the first row.
i128 cofactor_det(const std::vector<std::int64_t>& m, std::size_t n) {
    if (n == 1) return m[0];
    i128 total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::int64_t> minor;
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) minor.push_back(m[r * n + c]);
        const i128 term = m[col] * cofactor_det(minor, n - 1);
        total += (col % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace

TEST(Bareiss, SmallExamples) {
    EXPECT_EQ(determinant(std::vector<std::int64_t>{7}, 1), 7);
    EXPECT_EQ(determinant(std::vector<std::int64_t>{1, 2, 3, 4}, 2), -2);
    EXPECT_EQ(determinant(std::vector<std::int64_t>{2, 0, 0, 0, 3, 0, 0, 0, 4}, 3), 24);
    // zero leading pivot needs a row swap
    EXPECT_EQ(determinant(std::vector<std::int64_t>{0, 1, 1, 0}, 2), -1);
    EXPECT_EQ(determinant(std::vector<std::int64_t>{0, 0, 1, 0, 1, 0, 1, 0, 0}, 3), -1);
    // singular
    EXPECT_EQ(determinant(std::vector<std::int64_t>{1, 2, 2, 4}, 2), 0);
    EXPECT_EQ(determinant(std::vector<std::int64_t>{0, 0, 0, 5}, 2), 0);
    EXPECT_THROW(determinant(std::vector<std::int64_t>{1, 2, 3}, 2), invalid_input_error);
}

TEST(Bareiss, MatchesCofactorExpansion) {
    rng_stream rng(2024);
    for (int trial = 0; trial < 10'000; ++trial) {
        const std::size_t n = 1 + trial % 4;
        std::vector<std::int64_t> m(n * n);
        for (auto& v : m) v = rng.between(0, 9);
        ASSERT_EQ(determinant(m, n), cofactor_det(m, n));
        ASSERT_EQ(bareiss_determinant<i256>(m, n), cofactor_det(m, n));
    }
}

TEST(Bareiss, NegativeEntries) {
    rng_stream rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::vector<std::int64_t> m(n * n);
        for (auto& v : m) v = rng.between(-50, 50);
        ASSERT_EQ(determinant(m, n), cofactor_det(m, n));
    }
}

TEST(Bareiss, WidensPast128Bits) {
    // 8x8 with entries up to 1000 in magnitude: order-7 minors reach ~1e21,
    // so their pairwise products overflow __int128.
    rng_stream rng(99);
    std::vector<std::int64_t> m(64);
    for (auto& v : m) v = rng.between(-1000, 1000);
    EXPECT_THROW(bareiss_determinant<i128>(m, 8), overflow_error);
    const i128 wide = determinant(m, 8);
    EXPECT_EQ(wide, bareiss_determinant<i256>(m, 8));
    // Cofactor expansion in 128 bits is fine here: its terms stay near 1e25.
    EXPECT_EQ(wide, cofactor_det(m, 8));
}

TEST(Bareiss, DeterminantBeyond128BitsIsAnError) {
    // diag(2^40, ..., 2^40) in dimension 4: det = 2^160.
    std::vector<std::int64_t> m(16, 0);
    for (int i = 0; i < 4; ++i) m[i * 5] = std::int64_t{1} << 40;
    EXPECT_THROW(determinant(m, 4), overflow_error);
}
