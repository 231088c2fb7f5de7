#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fbmx/fbm.hpp"
#include "fbmx/grid.hpp"
#include "fbmx/rng.hpp"

namespace fbmx {

/// One draw of the comparison vectors built from shared normals zeta_i and an
/// independent Brownian motion W read at s_i = t_i^{2H}:
///   x_i = (sqrt(s_i) zeta_i - W(s_i)) / sqrt 2,
///   y_i = (zeta_i - W(s_i)) / sqrt 2.
struct ComparisonSample {
    std::vector<double> x_vec;
    std::vector<double> y_vec;
    std::vector<double> s_points;
    std::vector<double> zeta;
    std::vector<double> w_at_s;
};

/// s_i = t_i^{2H}; nondecreasing, each in (0,1].
std::vector<double> comparison_time_points(const Grid& grid, Hurst h);

/// Consumes n normals for zeta followed by n normals for the increments of W.
ComparisonSample sample_comparison_vectors(const Grid& grid, Hurst h, RngStream& rng);

/// Allocation-free variant for Monte Carlo loops: fills only x and y.
/// `s_points` from comparison_time_points; `scratch` needs 2n entries.
void sample_comparison_xy(std::span<const double> s_points, RngStream& rng, std::span<double> x,
                          std::span<double> y, std::span<double> scratch);

/// Cov(X_i, X_j) = (s_i delta_ij + min(s_i, s_j)) / 2.
double comparison_cov(std::span<const double> s_points, std::size_t i, std::size_t j);

struct PairMargin {
    std::size_t i = 0;
    std::size_t j = 0;
    double cov_x = 0.0;  ///< s_i / 2
    double cov_b = 0.0;  ///< fBM covariance at (t_i, t_j)
    double margin = 0.0; ///< cov_b - cov_x, nonnegative when ordered correctly
};

struct SlepianOrderReport {
    bool passed = true;
    double max_variance_gap = 0.0;        ///< max_i |Var X_i - Var B_i|
    double min_margin = 0.0;              ///< min over pairs of cov_b - cov_x
    double max_closed_form_error = 0.0;   ///< |fbm_cov - (s_i + s_j - s_j (1 - t_i/t_j)^{2H}) / 2|
    std::vector<PairMargin> pairs;        ///< i < j, row-major
    std::vector<PairMargin> violations;
};

/// Deterministic check that X matches the variances of B^{H,tau} and has
/// entrywise smaller off-diagonal covariances.
SlepianOrderReport verify_slepian_covariance_order(const Grid& grid, Hurst h);

struct CovGapReport {
    Eigen::MatrixXd gaps;              ///< d_ij = Cov(B)_ij - Cov(X)_ij
    double q_bound = 0.0;              ///< H ln n
    double max_gap = 0.0;
    double min_gap = 0.0;
    /// For uniform grids: max |d_ij - ((j/n)^{2H} - ((j-i)/n)^{2H}) / 2| over i < j.
    double uniform_closed_form_error = 0.0;
    bool uniform = false;
};

CovGapReport cov_gap_matrix(const Grid& grid, Hurst h);

}  // namespace fbmx
