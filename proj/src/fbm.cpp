#include "fbmx/fbm.hpp"

#include <cmath>
#include <string>

#include "fbmx/error.hpp"

namespace fbmx {

Hurst::Hurst(double h) : h_(h) {
    if (!(h > 0.0 && h <= 1.0)) throw DomainError("Hurst index must lie in (0,1], got " + std::to_string(h));
}

double fbm_cov(double s, double t, Hurst h) {
    const double p = h.two_h();
    return 0.5 * (std::pow(s, p) + std::pow(t, p) - std::pow(std::fabs(t - s), p));
}

CovMatrix build_fbm_cov_matrix(const Grid& grid, Hurst h) {
    const auto n = static_cast<Eigen::Index>(grid.size());
    Eigen::MatrixXd c(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        c(i, i) = fbm_cov(grid[i], grid[i], h);
        for (Eigen::Index j = 0; j < i; ++j) {
            const double v = fbm_cov(grid[j], grid[i], h);
            c(i, j) = v;
            c(j, i) = v;
        }
    }
    return CovMatrix(std::move(c));
}

std::string_view to_string(SamplerMethod m) {
    switch (m) {
        case SamplerMethod::automatic: return "auto";
        case SamplerMethod::cholesky: return "cholesky";
        case SamplerMethod::fft: return "fft";
    }
    return "auto";
}

SamplerMethod parse_sampler_method(std::string_view text) {
    if (text == "auto") return SamplerMethod::automatic;
    if (text == "cholesky") return SamplerMethod::cholesky;
    if (text == "fft") return SamplerMethod::fft;
    throw ConfigError("unknown sampler method '" + std::string(text) + "'");
}

FbmPathPlan::FbmPathPlan(Grid grid, Hurst h, SamplerMethod method)
    : grid_(std::move(grid)), h_(h), method_(method) {
    if (method_ == SamplerMethod::automatic)
        method_ = grid_.is_uniform() ? SamplerMethod::fft : SamplerMethod::cholesky;
    if (method_ == SamplerMethod::fft) {
        if (!grid_.is_uniform()) throw NonUniformGridForFFT();
        spectrum_ = circulant_embedding_build(grid_.size(), h_.value());
    } else {
        cov_ = cholesky_factorize(build_fbm_cov_matrix(grid_, h_));
    }
}

FbmPathSampler::FbmPathSampler(std::shared_ptr<const FbmPathPlan> plan) : plan_(std::move(plan)) {
    const std::size_t n = plan_->grid().size();
    scratch_.resize(n);
    if (const auto* spec = plan_->spectrum()) {
        fgn_.emplace(*spec);
        fft_scale_ = std::pow(static_cast<double>(n), -plan_->hurst().value());
    }
}

void FbmPathSampler::sample(RngStream& rng, std::span<double> out) {
    if (fgn_) {
        // fGn on unit steps, summed and rescaled to the grid {i/n} by self-similarity
        fgn_->sample(rng, scratch_);
        double acc = 0.0;
        for (std::size_t i = 0; i < scratch_.size(); ++i) {
            acc += scratch_[i];
            out[i] = acc * fft_scale_;
        }
    } else {
        sample_gaussian_vector(*plan_->covariance(), rng, out, scratch_);
    }
}

std::vector<double> sample_fbm_path(const Grid& grid, Hurst h, RngStream& rng, SamplerMethod method) {
    FbmPathSampler sampler(std::make_shared<const FbmPathPlan>(grid, h, method));
    std::vector<double> out(grid.size());
    sampler.sample(rng, out);
    return out;
}

}  // namespace fbmx
