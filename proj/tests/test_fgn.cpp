#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fbmx/error.hpp"
#include "fbmx/fgn.hpp"
#include "fbmx/rng.hpp"

using namespace fbmx;

namespace {

// naive DFT of the circulant first row
std::vector<double> dft_eigenvalues(std::size_t n, double h) {
    const std::size_t m = 2 * n;
    std::vector<double> row(m);
    for (std::size_t k = 0; k <= n; ++k) row[k] = fgn_autocovariance(static_cast<long>(k), h);
    for (std::size_t k = n + 1; k < m; ++k) row[k] = row[m - k];
    std::vector<double> ev(m);
    for (std::size_t j = 0; j < m; ++j) {
        long double s = 0;
        for (std::size_t k = 0; k < m; ++k)
            s += row[k] * std::cos(2.0L * 3.14159265358979323846L * j * k / m);
        ev[j] = static_cast<double>(s);
    }
    return ev;
}

}  // namespace

TEST(FgnAutocov, Values) {
    for (double h : {0.01, 0.3, 0.5, 0.9}) EXPECT_DOUBLE_EQ(fgn_autocovariance(0, h), 1.0);
    for (long k : {1L, 2L, 17L}) EXPECT_NEAR(fgn_autocovariance(k, 0.5), 0.0, 1e-15);
    EXPECT_NEAR(fgn_autocovariance(1, 0.25), 0.5 * (std::sqrt(2.0) - 2.0), 1e-15);
    EXPECT_NEAR(fgn_autocovariance(1, 0.25), -0.29289321881345, 1e-13);
    EXPECT_EQ(fgn_autocovariance(-3, 0.2), fgn_autocovariance(3, 0.2));
}

TEST(Embedding, WhiteNoise) {
    for (std::size_t n : {1u, 2u, 5u, 64u}) {
        auto s = circulant_embedding_build(n, 0.5);
        ASSERT_EQ(s.eigenvalues.size(), 2 * n);
        for (double e : s.eigenvalues) EXPECT_NEAR(e, 1.0, 1e-12);
    }
}

TEST(Embedding, MatchesDirectDft) {
    for (double h : {0.02, 0.1, 0.3, 0.8}) {
        auto s = circulant_embedding_build(64, h);
        auto ref = dft_eigenvalues(64, h);
        for (std::size_t j = 0; j < ref.size(); ++j) EXPECT_NEAR(s.eigenvalues[j], ref[j], 1e-10);
    }
}

TEST(Embedding, NonNegativeWithoutClamp) {
    auto s = circulant_embedding_build(64, 0.1);
    EXPECT_EQ(s.clamped, 0u);
    for (double e : s.eigenvalues) EXPECT_GE(e, 0.0);
}

TEST(FgnSampler, ConsumesTwoNNormals) {
    auto s = circulant_embedding_build(16, 0.3);
    FgnSampler sampler(s);
    RngStream r(1, 1);
    std::vector<double> out(16);
    sampler.sample(r, out);
    EXPECT_EQ(r.position(), 32u);
}

TEST(FgnSampler, WhiteNoiseMoments) {
    FgnSampler sampler(circulant_embedding_build(8, 0.5));
    RngStream r(4, 0);
    std::vector<double> out(8);
    const int paths = 50000;
    double s2 = 0, lag = 0;
    for (int p = 0; p < paths; ++p) {
        sampler.sample(r, out);
        for (std::size_t i = 0; i < 8; ++i) s2 += out[i] * out[i];
        for (std::size_t i = 0; i + 1 < 8; ++i) lag += out[i] * out[i + 1];
    }
    EXPECT_NEAR(s2 / (8.0 * paths), 1.0, 0.01);
    EXPECT_NEAR(lag / (7.0 * paths), 0.0, 0.01);
}

TEST(FgnSampler, Autocovariance) {
    const std::size_t n = 64;
    const double h = 0.1;
    FgnSampler sampler(circulant_embedding_build(n, h));
    std::vector<double> out(n);
    const int paths = 100000;
    double v = 0, c1 = 0, c5 = 0;
    for (int p = 0; p < paths; ++p) {
        RngStream r(77, static_cast<std::uint64_t>(p));
        sampler.sample(r, out);
        v += out[10] * out[10];
        c1 += out[20] * out[21];
        c5 += out[30] * out[35];
    }
    EXPECT_NEAR(v / paths, 1.0, 0.01);
    EXPECT_NEAR(c1 / paths, fgn_autocovariance(1, h), 0.01);
    EXPECT_NEAR(c5 / paths, fgn_autocovariance(5, h), 0.01);
}

TEST(FgnSampler, MoveAndConvenience) {
    auto spec = circulant_embedding_build(12, 0.2);
    FgnSampler a(spec);
    FgnSampler b(std::move(a));
    RngStream r1(3, 3), r2(3, 3);
    std::vector<double> out(12);
    b.sample(r1, out);
    auto v = sample_fgn_fft(spec, r2);
    ASSERT_EQ(v.size(), 12u);
    for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(v[i], out[i]);
}
