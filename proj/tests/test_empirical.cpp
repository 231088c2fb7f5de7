#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "fbmx/distributions.hpp"
#include "fbmx/error.hpp"
#include "fbmx/empirical.hpp"
#include "fbmx/normal.hpp"
#include "fbmx/rng.hpp"

using namespace fbmx;

namespace {

std::vector<double> normals(std::uint64_t seed, std::size_t n, double shift = 0.0) {
    RngStream r(seed, 0);
    std::vector<double> v(n);
    r.fill_normal(v);
    for (double& x : v) x += shift;
    return v;
}

}  // namespace

TEST(Ecdf, Basics) {
    EmpiricalDistribution e({3, 1, 2});
    EXPECT_EQ(e.ecdf(0.5), 0.0);
    EXPECT_EQ(e.ecdf(3.0), 1.0);
    EXPECT_DOUBLE_EQ(e.ecdf(2.0), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(ecdf(e, 1.999), 1.0 / 3.0);
    EXPECT_EQ(e.min(), 1);
    EXPECT_EQ(e.max(), 3);
    EXPECT_EQ(e.quantile(0.5), 2);
    EXPECT_EQ(e.quantile(1.0), 3);
    EXPECT_EQ(e.quantile(1.0 / 3.0), 1);
    EXPECT_DOUBLE_EQ(e.mean(), 2.0);
    EXPECT_DOUBLE_EQ(e.variance(), 1.0);
    EXPECT_THROW(e.quantile(0.0), DomainError);
    EXPECT_THROW(EmpiricalDistribution().quantile(0.5), EmptyVector);
}

TEST(Dkw, Radius) {
    EXPECT_NEAR(dkw_radius(100000, 0.01), std::sqrt(std::log(200.0) / 200000.0), 1e-16);
    EXPECT_NEAR(dkw_radius(100000, 0.01), 0.0051465, 1e-6);
    EXPECT_THROW(dkw_radius(10, 0.0), DomainError);
    EXPECT_THROW(dkw_radius(0, 0.1), EmptyVector);
}

TEST(KsOneSample, Degenerate) {
    EmpiricalDistribution e({0.0});
    EXPECT_DOUBLE_EQ(ks_empirical_vs_analytic(e, normal_law(0, 1)), 0.5);
}

TEST(KsOneSample, BruteForce) {
    EmpiricalDistribution e(normals(3, 500));
    auto law = normal_law(0.1, 1.2);
    double want = 0;
    auto s = e.samples();
    for (std::size_t i = 0; i < s.size(); ++i) {
        double f = law.cdf(s[i]);
        want = std::max({want, std::fabs((i + 1.0) / s.size() - f), std::fabs(f - double(i) / s.size())});
    }
    EXPECT_NEAR(ks_empirical_vs_analytic(e, law), want, 1e-15);
}

TEST(KsOneSample, OwnLawWithinDkw) {
    EmpiricalDistribution e(normals(17, 100000));
    EXPECT_LE(ks_empirical_vs_analytic(e, normal_law(0, 1)), e.dkw_radius(0.01));
}

TEST(KsOneSample, ShiftedLaw) {
    EmpiricalDistribution e(normals(18, 100000));
    EXPECT_NEAR(ks_empirical_vs_analytic(e, normal_law(1, 1)), 0.38292, 0.01);
}

TEST(KsOneSample, DkwFailureRate) {
    const double alpha = 0.01;
    const int reps = 100;
    auto law = gumbel_law();
    int fails = 0;
    for (int k = 0; k < reps; ++k) {
        RngStream r(5000 + k, 0);
        std::vector<double> v(2000);
        for (double& x : v) x = -std::log(-std::log(r.next_uniform()));
        EmpiricalDistribution e(std::move(v));
        fails += ks_empirical_vs_analytic(e, law) > e.dkw_radius(alpha);
    }
    EXPECT_LE(fails, 2);
}

TEST(KsTwoSample, Cases) {
    EmpiricalDistribution a({1, 2, 3}), b({1, 2, 3}), c({4, 5});
    EXPECT_EQ(ks_two_sample(a, b), 0.0);
    EXPECT_EQ(ks_two_sample(a, c), 1.0);
    EmpiricalDistribution d({1.5, 2.5});
    EXPECT_DOUBLE_EQ(ks_two_sample(a, d), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(ks_two_sample(d, a), 1.0 / 3.0);
}

TEST(Histogram, AllEqual) {
    auto h = histogram(EmpiricalDistribution({2, 2, 2}), 5);
    int occupied = 0;
    for (auto& b : h.bins) occupied += b.count > 0;
    EXPECT_EQ(occupied, 1);
    EXPECT_NEAR(h.bins.front().left, 1.5, 1e-15);
}

TEST(Histogram, NormalisedAndShaped) {
    EmpiricalDistribution e(normals(44, 100000));
    auto h = histogram(e, 80);
    ASSERT_EQ(h.bins.size(), 80u);
    double mass = 0, peak = 0;
    std::size_t total = 0;
    for (auto& b : h.bins) {
        mass += b.density * h.width;
        peak = std::max(peak, b.density);
        total += b.count;
    }
    EXPECT_EQ(total, e.count());
    EXPECT_NEAR(mass, 1.0, 1e-12);
    EXPECT_NEAR(peak, kInvSqrt2Pi, 0.05);
    EXPECT_THROW(histogram(e, 0), DomainError);
    EXPECT_THROW(histogram(EmpiricalDistribution(), 3), EmptyVector);
}
