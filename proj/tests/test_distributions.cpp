#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fbmx/distributions.hpp"
#include "fbmx/error.hpp"
#include "fbmx/normal.hpp"
#include "fbmx/rng.hpp"
#include "oracles.hpp"

using namespace fbmx;

namespace {

double trapezoid(const AnalyticDistribution& d, double lo, double hi, int steps) {
    double h = (hi - lo) / steps, s = 0.5 * (d.pdf(lo) + d.pdf(hi));
    for (int i = 1; i < steps; ++i) s += d.pdf(lo + i * h);
    return s * h;
}

}  // namespace

TEST(VectorMax, Basics) {
    EXPECT_EQ(vector_max(std::vector<double>{3}), 3);
    EXPECT_EQ(vector_max(std::vector<double>{-1, 0, -5}), 0);
    EXPECT_THROW(vector_max(std::vector<double>{}), EmptyVector);
    RngStream r(0, 0);
    std::vector<double> v(20);
    r.fill_normal(v);
    double m = vector_max(v);
    std::reverse(v.begin(), v.end());
    EXPECT_EQ(vector_max(v), m);
    std::rotate(v.begin(), v.begin() + 7, v.end());
    EXPECT_EQ(vector_max(v), m);
}

TEST(Gumbel, Values) {
    EXPECT_NEAR(gumbel_cdf(0.0), 0.36787944117144233, 1e-16);
    EXPECT_NEAR(gumbel_cdf(0.36651292058166433), 0.5, 1e-15);
    EXPECT_GT(gumbel_cdf(2.0), gumbel_cdf(1.0));
    EXPECT_NEAR(gumbel_pdf(0.0), std::exp(-1.0), 1e-16);
}

TEST(NormSeq, QuantileKind) {
    auto s100 = norm_seq(100, NormSeqKind::quantile);
    EXPECT_NEAR(s100.b_n, 2.3263478740408411, 1e-12);
    EXPECT_NEAR(s100.a_n, 2.7562061988248343, 1e-12);
    auto s10 = norm_seq(10, NormSeqKind::quantile);
    EXPECT_NEAR(s10.b_n, 1.2815515655446005, 1e-12);
    EXPECT_NEAR(s10.a_n, 2.0618557116169795, 1e-12);
    auto s6 = norm_seq(1000000, NormSeqKind::quantile);
    EXPECT_NEAR(s6.b_n, 4.7534243088228989, 1e-11);
    EXPECT_NEAR(s6.a_n, 4.9637989640254412, 1e-11);
    EXPECT_NEAR(s10.b_n, oracle::quantile(0.9), 1e-12);
}

TEST(NormSeq, ClassicalKind) {
    auto s = norm_seq(20, NormSeqKind::classical);
    EXPECT_NEAR(s.a_n, 2.4477468306808165, 1e-13);
    EXPECT_NEAR(s.b_n, 1.7066136175034783, 1e-13);
}

TEST(NormSeq, Degenerate) {
    for (long n : {0L, 1L, 2L}) {
        EXPECT_THROW(norm_seq(n, NormSeqKind::quantile), DegenerateNormalization);
        EXPECT_THROW(norm_seq(n, NormSeqKind::classical), DegenerateNormalization);
    }
}

TEST(ScaledGumbel, Properties) {
    auto seq = norm_seq(1000, NormSeqKind::quantile);
    auto d = scaled_gumbel(seq);
    EXPECT_NEAR(d.cdf(seq.b_n), std::exp(-1.0), 1e-15);
    EXPECT_NEAR(d.cdf(seq.b_n - std::log(std::log(2.0)) / seq.a_n), 0.5, 1e-14);
    auto sup = d.support_hint();
    EXPECT_NEAR(trapezoid(d, sup.low, sup.high, 200000), 1.0, 1e-6);
    EXPECT_LT(d.cdf(sup.low), 1e-10);
    EXPECT_GT(d.cdf(sup.high), 1 - 1e-10);
}

TEST(LimitLaw, SmallN) {
    auto one = limit_law_h0(1);
    for (double x = -3; x <= 3; x += 0.25) EXPECT_NEAR(one.cdf(x), oracle::Phi(x), 1e-8);
    EXPECT_NEAR(limit_law_h0(2).cdf(0.0), 1.0 / 3.0, 1e-8);
    EXPECT_NEAR(limit_law_h0(8).cdf(0.0), 1.0 / 9.0, 1e-8);
    EXPECT_THROW(limit_law_h0(0), DomainError);
}

TEST(LimitLaw, EightPointsAgainstQuadratureOracle) {
    const std::pair<double, double> ref[] = {
        {-0.5, 0.032957703704880804}, {0.5, 0.27187451855015443}, {1.0, 0.5003019886599168},
        {1.5, 0.7265176592243001},    {2.0, 0.8842897234236443},
    };
    auto d = limit_law_h0(8);
    for (auto [x, want] : ref) EXPECT_NEAR(d.cdf(x), want, 1e-7) << x;
}

TEST(LimitLaw, MonteCarlo) {
    auto d = limit_law_h0(8);
    RngStream r(808, 0);
    const int draws = 400000;
    const double xs[] = {0.0, 0.75, 1.5};
    int below[3] = {};
    for (int k = 0; k < draws; ++k) {
        double z0 = r.next_normal(), m = -1e300;
        for (int i = 0; i < 8; ++i) m = std::max(m, r.next_normal());
        double v = (m - z0) / std::sqrt(2.0);
        for (int j = 0; j < 3; ++j) below[j] += v <= xs[j];
    }
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(static_cast<double>(below[j]) / draws, d.cdf(xs[j]), 0.004);
}

TEST(NormalApprox, Values) {
    auto d = normal_approx(1024);
    double mu = std::sqrt(std::log(1024.0));
    EXPECT_NEAR(mu, 2.6327688477341593, 1e-15);
    EXPECT_NEAR(d.pdf(mu), 1.0 / std::sqrt(kPi), 1e-14);
    EXPECT_NEAR(d.cdf(mu), 0.5, 1e-15);
    EXPECT_THROW(normal_approx(1), DomainError);
}

TEST(DnLaw, Values) {
    auto d = dn_law(1024);
    auto seq = norm_seq(1024, NormSeqKind::quantile);
    EXPECT_LT(d.cdf(seq.b_n - 10), 1e-9);
    EXPECT_GT(d.cdf(seq.b_n + 10), 1 - 1e-9);
    EXPECT_NEAR(d.cdf(2.3), 0.4980136613645407, 1e-7);
    EXPECT_NEAR(d.cdf(2.0), 0.34283009161080386, 1e-7);
    EXPECT_NEAR(dn_mean(1024), 2.3094383021986283, 1e-12);
    EXPECT_NEAR(distribution_mean(d), dn_mean(1024), 1e-4);
    EXPECT_THROW(dn_law(2), DegenerateNormalization);
}

TEST(DnLaw, MonteCarlo) {
    auto d = dn_law(1024);
    auto seq = norm_seq(1024, NormSeqKind::quantile);
    RngStream r(1024, 0);
    const int draws = 400000;
    int below = 0;
    for (int k = 0; k < draws; ++k) {
        double g = -std::log(-std::log(r.next_uniform()));
        double v = (seq.b_n + g / seq.a_n + r.next_normal()) / std::sqrt(2.0);
        below += v <= 2.3;
    }
    EXPECT_NEAR(static_cast<double>(below) / draws, d.cdf(2.3), 0.004);
}

TEST(NormalizedMax, MatchesPower) {
    auto seq = norm_seq(50, NormSeqKind::quantile);
    auto d = normalized_normal_max(seq);
    for (double x : {-1.0, 0.0, 2.0})
        EXPECT_NEAR(d.cdf(x), std::pow(oracle::Phi(seq.b_n + x / seq.a_n), 50), 1e-12);
}

TEST(Distribution, NoPdf) {
    AnalyticDistribution d("step", [](double x) { return x < 0 ? 0.0 : 1.0; }, std::nullopt, {-1, 1});
    EXPECT_FALSE(d.has_pdf());
    EXPECT_THROW(d.pdf(0.0), Error);
}
