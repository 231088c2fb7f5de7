#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fbmx/rng.hpp"

namespace fbmx {

/// Symmetric covariance matrix with an optional lower-triangular factor.
class CovMatrix {
public:
    CovMatrix() = default;

    /// Throws Error if `entries` is not square or not exactly symmetric.
    explicit CovMatrix(Eigen::MatrixXd entries);

    static CovMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXd& entries() const noexcept { return entries_; }
    double operator()(std::size_t i, std::size_t j) const {
        return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    double max_diagonal() const;

    bool has_factor() const noexcept { return factor_.has_value(); }
    const Eigen::MatrixXd& factor() const;

    /// max |L L^T - entries|; requires a factor.
    double reconstruction_error() const;

private:
    friend CovMatrix cholesky_factorize(const CovMatrix&, double);

    Eigen::MatrixXd entries_;
    std::optional<Eigen::MatrixXd> factor_;
};

/// Relative pivot tolerance: pivots below tol * max diagonal are treated as 0,
/// pivots below -tol * max diagonal are an error.
inline constexpr double kCholeskyPivotTolerance = 1e-12;

/// Cholesky factorization in natural pivot order, accepting positive
/// semi-definite matrices. `jitter` (absolute, default 0) is added to the
/// diagonal before factorizing. Throws NotPositiveDefinite carrying the
/// failing index.
CovMatrix cholesky_factorize(const CovMatrix& m, double jitter = 0.0);

/// Writes factor * z into `out`, where z holds dim() normals drawn from `rng`.
/// Throws MissingFactor if `m` was not factorized.
void sample_gaussian_vector(const CovMatrix& m, RngStream& rng, std::span<double> out,
                            std::span<double> scratch);

std::vector<double> sample_gaussian_vector(const CovMatrix& m, RngStream& rng);

}  // namespace fbmx
