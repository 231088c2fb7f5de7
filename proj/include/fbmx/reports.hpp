#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fbmx/empirical.hpp"

namespace fbmx {

/// Default histogram resolution for the maximum-law figure.
inline constexpr int kFigureBins = 80;

struct CurvePoint {
    double x = 0.0;
    double normal_pdf = 0.0;
    double dn_pdf = 0.0;
};

struct Fig1Report {
    std::size_t n = 0;
    double hurst = 0.0;
    std::size_t paths = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    double variance = 0.0;
    double dn_mean = 0.0;         ///< (b_n + gamma / a_n) / sqrt 2
    double normal_mean = 0.0;     ///< sqrt(ln n)
    double ks_normal = 0.0;       ///< KS(emp, N(sqrt ln n, 1/2))
    double ks_dn = 0.0;           ///< KS(emp, D_n)
    bool dn_better = false;       ///< ks_dn < ks_normal
    Histogram histogram;
    std::vector<CurvePoint> curves;
    EmpiricalDistribution samples;
};

/// Uniform grid {i/n}, H = (ln n)^{-2}: empirical law of the grid maximum
/// against the first-order normal law and D_n. Throws ConfigError for n < 8.
Fig1Report reproduce_fig1(std::size_t n, std::size_t paths, std::uint64_t seed, unsigned threads = 0,
                          int bins = kFigureBins, std::size_t curve_points = 401);

struct SmallHReport {
    std::size_t n = 0;
    double hurst = 0.0;
    std::size_t paths = 0;
    double ks = 0.0;           ///< KS(emp, limit_law_h0(n))
    double dkw_radius_99 = 0.0;
    EmpiricalDistribution samples;
};

/// Grid {i/n} at a very small H against the H -> 0 limit law.
/// Requires h <= 1e-3 and n <= 32 (ConfigError otherwise).
SmallHReport small_h_limit_check(std::size_t n, double h, std::size_t paths, std::uint64_t seed,
                                 unsigned threads = 0);

}  // namespace fbmx
