#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fbmx/distributions.hpp"
#include "fbmx/dominance.hpp"
#include "fbmx/empirical.hpp"

namespace fbmx {

/// Distribution function with an optional closed-form generalized inverse.
struct CdfObject {
    std::function<double(double)> cdf;
    std::optional<std::function<double(double)>> inv;

    static CdfObject from(const AnalyticDistribution& d);
    static CdfObject normal(double mean, double sd);
    static CdfObject uniform01();
    static CdfObject point_mass(double at);
};

/// inf{x : F(x) >= p} for p in (0,1). Uses `inv` when present, otherwise
/// bisection inside a bracket that starts at [-64, 64] and doubles up to
/// 2^10. Throws DomainError or BracketFailure.
double generalized_inverse(const CdfObject& c, double p);

/// Probabilities equal to 0 or 1 are moved into (0,1) by this amount.
inline constexpr double kCouplingNudge = 1e-15;

/// Y'_i = F_Y^{(-1)}(F_X(x_i)). If F_X <= F_Y pointwise then Y'_i <= x_i.
std::vector<double> monotone_coupling(std::span<const double> x_samples, const CdfObject& fx,
                                      const CdfObject& fy);

/// Same construction with empirical laws: F_X at the i-th order statistic is
/// the midpoint plotting position (i - 1/2)/N, and F_Y^{(-1)} is the
/// empirical quantile of `y_law`. Ties in x share the mean position.
std::vector<double> empirical_monotone_coupling(std::span<const double> x_samples,
                                                const EmpiricalDistribution& y_law);

struct CounterexampleReport {
    double p_xz_above_1 = 0.0;            ///< P(X + Z > 1), exact
    double p_yz_above_1 = 0.0;            ///< P(Y + Z > 1), exact
    double p_xz_above_1_empirical = 0.0;
    double p_yz_above_1_empirical = 0.0;
    std::size_t draws = 0;
    std::uint64_t seed = 0;
    bool x_geq_st_y = false;              ///< empirical X >=st Y (equal laws)
    bool raw_sum_dominance = false;       ///< empirical X + Z >=st Y + Z, expected false
    bool coupled_sum_dominance = false;   ///< empirical X + Z >=st Y' + Z, expected true
};

/// X ~ U[0,1], Y = Z = 1 - X: X >=st Y, yet X + Z = 1 while Y + Z ~ U[0,2].
CounterexampleReport counterexample_demo(std::size_t draws = 100000, std::uint64_t seed = 2017,
                                         double alpha = 0.01);

/// Tests X + Z >=st Y' + Z, with Y' the empirical monotone coupling of y
/// onto the probability space of x, and z added pairwise (z[i] pairs with
/// x[i]). The report reads A = Y' + Z, B = X + Z.
DominanceReport shifted_sum_dominance(std::span<const double> x, std::span<const double> y,
                                      std::span<const double> z, double alpha);

/// Same test with the exact coupling Y' = F_Y^{(-1)}(F_X(x_i)).
DominanceReport shifted_sum_dominance(std::span<const double> x, std::span<const double> z, const CdfObject& fx,
                                      const CdfObject& fy, double alpha);

}  // namespace fbmx
