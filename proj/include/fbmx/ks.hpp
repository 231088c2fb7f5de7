#pragma once

#include <cstddef>

#include "fbmx/distributions.hpp"

namespace fbmx {

struct KsDistance {
    double value = 0.0;       ///< sup |F - G| found (a lower bound on the true supremum)
    double argmax = 0.0;
    double grid_step = 0.0;   ///< spacing of the coarse scan
};

/// Uniform distance between two distribution functions: a coarse scan of
/// `grid_size` points over the union of the support hints, refined by
/// golden-section search around the best grid point. grid_size >= 1000.
KsDistance ks_analytic(const AnalyticDistribution& f, const AnalyticDistribution& g,
                       std::size_t grid_size = 4000);

struct GumbelRate {
    double ks = 0.0;     ///< sup_x |Phi(b_n + x/a_n)^n - Lambda(x)|
    double bound = 0.0;  ///< 1 / (3 ln n)
};

/// Multiplicative slack applied to the asymptotic 1/(3 ln n) rate at finite n.
inline constexpr double kGumbelRateSlack = 1.2;

GumbelRate gumbel_rate_check(long n, NormSeqKind kind = NormSeqKind::quantile);

}  // namespace fbmx
