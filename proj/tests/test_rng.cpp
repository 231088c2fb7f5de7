#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "fbmx/normal.hpp"
#include "fbmx/rng.hpp"

using namespace fbmx;

// Random123 known-answer vectors
TEST(Philox, KnownAnswers) {
    using C = std::array<std::uint32_t, 4>;
    using K = std::array<std::uint32_t, 2>;
    EXPECT_EQ(philox4x32_10(C{0, 0, 0, 0}, K{0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(philox4x32_10(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}),
              (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(philox4x32_10(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}),
              (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Rng, SameKeySameSequence) {
    RngStream a(42, 7), b(42, 7);
    for (int i = 0; i < 1000; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, StreamsDiffer) {
    RngStream a(42, 7), b(42, 8), c(43, 7);
    int same_b = 0, same_c = 0;
    for (int i = 0; i < 100; ++i) {
        auto x = a.next_u64();
        same_b += x == b.next_u64();
        same_c += x == c.next_u64();
    }
    EXPECT_EQ(same_b, 0);
    EXPECT_EQ(same_c, 0);
}

TEST(Rng, PositionCounts) {
    RngStream r(1, 0);
    EXPECT_EQ(r.position(), 0u);
    r.next_u64();
    EXPECT_EQ(r.position(), 1u);
    r.next_uniform();
    r.next_normal();
    EXPECT_EQ(r.position(), 3u);
}

TEST(Rng, NormalIsQuantileOfUniform) {
    RngStream a(5, 3), b(5, 3);
    for (int i = 0; i < 100; ++i) {
        double u = a.next_uniform();
        EXPECT_EQ(b.next_normal(), std_normal_quantile_as241(u));
    }
}

TEST(Rng, FillMatchesSingleDraws) {
    RngStream a(9, 1), b(9, 1);
    std::vector<double> v(37);
    a.fill_normal(v);
    for (double x : v) EXPECT_EQ(x, b.next_normal());
}

TEST(Rng, UniformOpenInterval) {
    RngStream r(0, 0);
    double lo = 1, hi = 0, sum = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double u = r.next_uniform();
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    EXPECT_GT(lo, 0.0);
    EXPECT_LT(hi, 1.0);
    EXPECT_NEAR(sum / n, 0.5, 5.0 * std::sqrt(1.0 / 12 / n));
}

TEST(Rng, NormalMoments) {
    RngStream r(11, 0);
    const int n = 200000;
    double s = 0, s2 = 0, s4 = 0;
    for (int i = 0; i < n; ++i) {
        double z = r.next_normal();
        s += z;
        s2 += z * z;
        s4 += z * z * z * z;
    }
    EXPECT_NEAR(s / n, 0.0, 0.012);
    EXPECT_NEAR(s2 / n, 1.0, 0.02);
    EXPECT_NEAR(s4 / n, 3.0, 0.1);
}

TEST(Rng, DeriveSeed) {
    EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 50; ++s)
        for (std::uint64_t t = 0; t < 50; ++t) seen.insert(derive_seed(s, t));
    EXPECT_EQ(seen.size(), 2500u);
}
