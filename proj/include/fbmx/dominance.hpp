#pragma once

#include <string_view>
#include <vector>

#include "fbmx/empirical.hpp"

namespace fbmx {

enum class DominanceDirection { a_st_leq_b, b_st_leq_a, inconclusive };

std::string_view to_string(DominanceDirection d);

enum class DominanceTolerance {
    dkw_sum,      ///< dkw_radius_A(alpha) + dkw_radius_B(alpha)
    two_sample,   ///< one-sided two-sample KS critical value sqrt(ln(1/alpha) (m+n) / (2mn))
};

struct QuantileRow {
    double level = 0.0;
    double quantile_a = 0.0;
    double quantile_b = 0.0;
};

struct DominanceReport {
    DominanceDirection direction = DominanceDirection::inconclusive;
    bool a_leq_b = false;          ///< ECDF_A >= ECDF_B - allowed everywhere
    bool b_leq_a = false;
    double max_violation = 0.0;    ///< sup (ECDF_B - ECDF_A), positive part
    double reverse_violation = 0.0;///< sup (ECDF_A - ECDF_B), positive part
    double allowed = 0.0;
    std::vector<QuantileRow> details;
};

/// Empirical test of A <=st B (P(A <= x) >= P(B <= x) for all x). When both
/// directions pass (equal laws within noise) the direction reads a_st_leq_b.
/// Throws EmptyVector if either sample is empty.
DominanceReport dominance_test(const EmpiricalDistribution& a, const EmpiricalDistribution& b, double alpha,
                               DominanceTolerance tolerance = DominanceTolerance::dkw_sum);

}  // namespace fbmx
