#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fbmx/cov_matrix.hpp"
#include "fbmx/fgn.hpp"
#include "fbmx/grid.hpp"
#include "fbmx/rng.hpp"

namespace fbmx {

/// Hurst index, 0 < H <= 1.
class Hurst {
public:
    explicit Hurst(double h);
    double value() const noexcept { return h_; }
    double two_h() const noexcept { return 2.0 * h_; }

private:
    double h_;
};

/// E B^H_s B^H_t = (s^{2H} + t^{2H} - |t - s|^{2H}) / 2.
double fbm_cov(double s, double t, Hurst h);

CovMatrix build_fbm_cov_matrix(const Grid& grid, Hurst h);

enum class SamplerMethod { automatic, cholesky, fft };

std::string_view to_string(SamplerMethod m);
/// Accepts "auto", "cholesky", "fft"; throws ConfigError otherwise.
SamplerMethod parse_sampler_method(std::string_view text);

/// Immutable sampling setup for B^{H,tau}: either the circulant spectrum of
/// the increments (uniform grids) or the Cholesky factor of the covariance.
/// Safe to share between threads.
class FbmPathPlan {
public:
    /// Throws NonUniformGridForFFT, NotPositiveDefinite, EmbeddingFailure.
    FbmPathPlan(Grid grid, Hurst h, SamplerMethod method);

    const Grid& grid() const noexcept { return grid_; }
    Hurst hurst() const noexcept { return h_; }
    /// Resolved method, never `automatic`.
    SamplerMethod method() const noexcept { return method_; }

    const FgnSpectrum* spectrum() const noexcept { return spectrum_ ? &*spectrum_ : nullptr; }
    const CovMatrix* covariance() const noexcept { return cov_ ? &*cov_ : nullptr; }

private:
    Grid grid_;
    Hurst h_;
    SamplerMethod method_;
    std::optional<FgnSpectrum> spectrum_;
    std::optional<CovMatrix> cov_;
};

/// Per-worker sampling workspace bound to a shared plan.
class FbmPathSampler {
public:
    explicit FbmPathSampler(std::shared_ptr<const FbmPathPlan> plan);

    const FbmPathPlan& plan() const noexcept { return *plan_; }

    /// One exact draw of (B^H_{t_1}, ..., B^H_{t_n}) into `out` (size n).
    void sample(RngStream& rng, std::span<double> out);

private:
    std::shared_ptr<const FbmPathPlan> plan_;
    std::optional<FgnSampler> fgn_;
    std::vector<double> scratch_;
    double fft_scale_ = 1.0;
};

/// Single draw; builds a plan on every call, so loops should hold an
/// FbmPathSampler instead.
std::vector<double> sample_fbm_path(const Grid& grid, Hurst h, RngStream& rng,
                                    SamplerMethod method = SamplerMethod::automatic);

}  // namespace fbmx
