#include "fbmx/fgn.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>

#include <fftw3.h>

#include "fbmx/error.hpp"
#include "fbmx/normal.hpp"

namespace fbmx {

namespace {

// The FFTW planner is not re-entrant; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

}  // namespace

double fgn_autocovariance(long k, double hurst) {
    const double two_h = 2.0 * hurst;
    const double kk = std::fabs(static_cast<double>(k));
    return 0.5 * (std::pow(kk + 1.0, two_h) - 2.0 * std::pow(kk, two_h) +
                  std::pow(std::fabs(kk - 1.0), two_h));
}

FgnSpectrum circulant_embedding_build(std::size_t n, double hurst) {
    if (n < 1) throw DomainError("circulant embedding needs n >= 1");
    if (!(hurst > 0.0 && hurst <= 1.0)) throw DomainError("Hurst index must lie in (0,1]");

    const std::size_t m = 2 * n;
    std::unique_ptr<double, FftwFree> row(fftw_alloc_real(m));
    std::unique_ptr<fftw_complex, FftwFree> spec(fftw_alloc_complex(n + 1));
    for (std::size_t k = 0; k <= n; ++k) row.get()[k] = fgn_autocovariance(static_cast<long>(k), hurst);
    for (std::size_t k = n + 1; k < m; ++k) row.get()[k] = row.get()[m - k];

    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(m), row.get(), spec.get(), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    FgnSpectrum out;
    out.n = n;
    out.hurst = hurst;
    out.eigenvalues.resize(m);
    for (std::size_t k = 0; k <= n; ++k) out.eigenvalues[k] = spec.get()[k][0];
    for (std::size_t k = n + 1; k < m; ++k) out.eigenvalues[k] = out.eigenvalues[m - k];

    const double max_ev = *std::max_element(out.eigenvalues.begin(), out.eigenvalues.end());
    const double min_ev = *std::min_element(out.eigenvalues.begin(), out.eigenvalues.end());
    if (min_ev < -kEmbeddingClampTolerance * max_ev) throw EmbeddingFailure(min_ev, max_ev);
    for (double& ev : out.eigenvalues) {
        if (ev < 0.0) {
            ev = 0.0;
            ++out.clamped;
        }
    }
    return out;
}

struct FgnSampler::Impl {
    FgnSpectrum spectrum;
    std::vector<double> scale;  // sqrt(lambda_k / 2M), k = 0..n
    std::unique_ptr<fftw_complex, FftwFree> freq;
    std::unique_ptr<double, FftwFree> time;
    fftw_plan plan = nullptr;

    ~Impl() {
        if (plan) {
            std::lock_guard lock(planner_mutex());
            fftw_destroy_plan(plan);
        }
    }
};

FgnSampler::FgnSampler(FgnSpectrum spectrum) : impl_(std::make_unique<Impl>()) {
    const std::size_t n = spectrum.n;
    const std::size_t m = 2 * n;
    impl_->scale.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        impl_->scale[k] = std::sqrt(spectrum.eigenvalues[k] / (2.0 * static_cast<double>(m)));
    impl_->freq.reset(fftw_alloc_complex(n + 1));
    impl_->time.reset(fftw_alloc_real(m));
    {
        std::lock_guard lock(planner_mutex());
        impl_->plan = fftw_plan_dft_c2r_1d(static_cast<int>(m), impl_->freq.get(),
                                           impl_->time.get(), FFTW_ESTIMATE);
    }
    impl_->spectrum = std::move(spectrum);
}

FgnSampler::~FgnSampler() = default;
FgnSampler::FgnSampler(FgnSampler&&) noexcept = default;
FgnSampler& FgnSampler::operator=(FgnSampler&&) noexcept = default;

const FgnSpectrum& FgnSampler::spectrum() const noexcept { return impl_->spectrum; }
std::size_t FgnSampler::size() const noexcept { return impl_->spectrum.n; }

void FgnSampler::sample(RngStream& rng, std::span<double> out) {
    const std::size_t n = impl_->spectrum.n;
    fftw_complex* w = impl_->freq.get();
    const auto& scale = impl_->scale;

    // Hermitian spectrum: real modes at k = 0 and k = n carry variance lambda/M,
    // the others are complex with lambda/(2M) in each of the two parts.
    w[0][0] = kSqrt2 * scale[0] * rng.next_normal();
    w[0][1] = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        w[k][0] = scale[k] * rng.next_normal();
        w[k][1] = scale[k] * rng.next_normal();
    }
    w[n][0] = kSqrt2 * scale[n] * rng.next_normal();
    w[n][1] = 0.0;

    fftw_execute(impl_->plan);
    std::copy_n(impl_->time.get(), n, out.begin());
}

std::vector<double> sample_fgn_fft(const FgnSpectrum& spectrum, RngStream& rng) {
    FgnSampler sampler(spectrum);
    std::vector<double> out(spectrum.n);
    sampler.sample(rng, out);
    return out;
}

}  // namespace fbmx
