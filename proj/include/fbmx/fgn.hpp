#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fbmx/rng.hpp"

namespace fbmx {

/// Autocovariance of unit-step fractional Gaussian noise,
/// 0.5 (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}).
double fgn_autocovariance(long k, double hurst);

/// Eigenvalues of the circulant embedding of the fGn covariance on n points.
/// The circulant has size 2n and first row
/// [g(0), g(1), ..., g(n), g(n-1), ..., g(1)].
struct FgnSpectrum {
    std::size_t n = 0;
    double hurst = 0.5;
    std::vector<double> eigenvalues;  ///< length 2n, all >= 0
    std::size_t clamped = 0;          ///< eigenvalues clamped from round-off negatives
};

/// Relative threshold below which negative eigenvalues abort the embedding.
inline constexpr double kEmbeddingClampTolerance = 1e-9;

/// Builds the spectrum. Eigenvalues in [-1e-9 max, 0) are clamped to 0; more
/// negative values throw EmbeddingFailure.
FgnSpectrum circulant_embedding_build(std::size_t n, double hurst);

/// Reusable FFT workspace for drawing exact fGn samples from one spectrum.
/// Not shareable between threads; create one per worker.
class FgnSampler {
public:
    explicit FgnSampler(FgnSpectrum spectrum);
    ~FgnSampler();
    FgnSampler(FgnSampler&&) noexcept;
    FgnSampler& operator=(FgnSampler&&) noexcept;
    FgnSampler(const FgnSampler&) = delete;
    FgnSampler& operator=(const FgnSampler&) = delete;

    const FgnSpectrum& spectrum() const noexcept;
    std::size_t size() const noexcept;

    /// One exact fGn path of length n; consumes 2n normals from `rng`.
    void sample(RngStream& rng, std::span<double> out);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Convenience wrapper that plans a transform for a single draw.
std::vector<double> sample_fgn_fft(const FgnSpectrum& spectrum, RngStream& rng);

}  // namespace fbmx
