#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "fbmx/error.hpp"
#include "fbmx/fbm.hpp"
#include "fbmx/rng.hpp"

using namespace fbmx;

TEST(Hurst, Range) {
    EXPECT_NO_THROW(Hurst(1.0));
    EXPECT_NO_THROW(Hurst(1e-9));
    EXPECT_THROW(Hurst(0.0), DomainError);
    EXPECT_THROW(Hurst(1.01), DomainError);
    EXPECT_THROW(Hurst(std::nan("")), DomainError);
}

TEST(FbmCov, Values) {
    for (double h : {0.01, 0.4, 1.0}) EXPECT_DOUBLE_EQ(fbm_cov(1, 1, Hurst(h)), 1.0);
    EXPECT_DOUBLE_EQ(fbm_cov(0.25, 0.64, Hurst(0.5)), 0.25);
    EXPECT_NEAR(fbm_cov(0.2, 0.5, Hurst(1.0)), 0.10, 1e-15);
    EXPECT_EQ(fbm_cov(0.3, 0.7, Hurst(0.2)), fbm_cov(0.7, 0.3, Hurst(0.2)));
}

TEST(FbmCovMatrix, Examples) {
    auto one = build_fbm_cov_matrix(Grid({1.0}), Hurst(0.3));
    EXPECT_EQ(one(0, 0), 1.0);
    auto bm = build_fbm_cov_matrix(Grid::uniform(4), Hurst(0.5));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(bm(i, j), (std::min(i, j) + 1) / 4.0, 1e-15);
    auto q = build_fbm_cov_matrix(Grid({0.5, 1.0}), Hurst(0.25));
    EXPECT_NEAR(q(0, 0), 0.70710678118654752, 1e-15);
    EXPECT_NEAR(q(0, 1), 0.5, 1e-15);
    EXPECT_EQ(q(1, 1), 1.0);
}

TEST(SamplerMethod, Parse) {
    EXPECT_EQ(parse_sampler_method("auto"), SamplerMethod::automatic);
    EXPECT_EQ(parse_sampler_method("fft"), SamplerMethod::fft);
    EXPECT_EQ(parse_sampler_method("cholesky"), SamplerMethod::cholesky);
    EXPECT_THROW(parse_sampler_method("gibbs"), ConfigError);
    EXPECT_EQ(to_string(SamplerMethod::fft), "fft");
}

TEST(FbmPathPlan, Resolution) {
    EXPECT_EQ(FbmPathPlan(Grid::uniform(8), Hurst(0.2), SamplerMethod::automatic).method(), SamplerMethod::fft);
    EXPECT_EQ(FbmPathPlan(Grid({0.3, 1.0}), Hurst(0.2), SamplerMethod::automatic).method(),
              SamplerMethod::cholesky);
    EXPECT_THROW(FbmPathPlan(Grid({0.3, 1.0}), Hurst(0.2), SamplerMethod::fft), NonUniformGridForFFT);
}

TEST(FbmPath, SinglePointIsStandardNormal) {
    for (auto m : {SamplerMethod::cholesky, SamplerMethod::fft}) {
        RngStream r(6, 0);
        const int draws = 50000;
        double s = 0, s2 = 0;
        for (int i = 0; i < draws; ++i) {
            double v = sample_fbm_path(Grid({1.0}), Hurst(0.3), r, m)[0];
            s += v;
            s2 += v * v;
        }
        EXPECT_NEAR(s / draws, 0.0, 0.02);
        EXPECT_NEAR(s2 / draws, 1.0, 0.02);
    }
}

TEST(FbmPath, BrownianIncrements) {
    auto plan = std::make_shared<const FbmPathPlan>(Grid::uniform(8), Hurst(0.5), SamplerMethod::fft);
    FbmPathSampler sampler(plan);
    std::vector<double> out(8);
    const int paths = 50000;
    double v = 0, c = 0;
    for (int p = 0; p < paths; ++p) {
        RngStream r(12, static_cast<std::uint64_t>(p));
        sampler.sample(r, out);
        double d1 = out[3] - out[2], d2 = out[6] - out[5];
        v += d1 * d1;
        c += d1 * d2;
    }
    EXPECT_NEAR(v / paths, 0.125, 0.005);
    EXPECT_NEAR(c / paths, 0.0, 0.005);
}

class FbmCovarianceByMethod : public ::testing::TestWithParam<SamplerMethod> {};

TEST_P(FbmCovarianceByMethod, MatchesMatrix) {
    const std::size_t n = 16;
    Hurst h(0.1);
    auto plan = std::make_shared<const FbmPathPlan>(Grid::uniform(n), h, GetParam());
    FbmPathSampler sampler(plan);
    auto target = build_fbm_cov_matrix(Grid::uniform(n), h).entries();
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> out(n);
    const int paths = 100000;
    for (int p = 0; p < paths; ++p) {
        RngStream r(99, static_cast<std::uint64_t>(p));
        sampler.sample(r, out);
        Eigen::Map<Eigen::VectorXd> v(out.data(), n);
        acc.noalias() += v * v.transpose();
    }
    acc /= paths;
    EXPECT_LT((acc - target).cwiseAbs().maxCoeff(), 0.02);
}

INSTANTIATE_TEST_SUITE_P(Methods, FbmCovarianceByMethod,
                         ::testing::Values(SamplerMethod::cholesky, SamplerMethod::fft));
