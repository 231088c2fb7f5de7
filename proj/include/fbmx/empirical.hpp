#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fbmx/distributions.hpp"

namespace fbmx {

/// Sorted Monte Carlo sample with right-continuous ECDF queries.
class EmpiricalDistribution {
public:
    EmpiricalDistribution() = default;
    explicit EmpiricalDistribution(std::vector<double> samples);

    std::span<const double> samples() const noexcept { return samples_; }
    std::size_t count() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }

    /// (number of samples <= x) / count.
    double ecdf(double x) const;
    /// inf{x : ecdf(x) >= p} for p in (0,1].
    double quantile(double p) const;

    double mean() const;
    /// Unbiased sample variance.
    double variance() const;
    double min() const { return samples_.front(); }
    double max() const { return samples_.back(); }

    /// sqrt(ln(2/alpha) / (2 count)): the DKW band holding with prob. 1 - alpha.
    double dkw_radius(double alpha) const;

private:
    std::vector<double> samples_;
};

double ecdf(const EmpiricalDistribution& emp, double x);

double dkw_radius(std::size_t count, double alpha);

/// Exact one-sample KS statistic against a continuous law.
double ks_empirical_vs_analytic(const EmpiricalDistribution& emp, const AnalyticDistribution& law);

/// sup_x |F_a(x) - F_b(x)| over the pooled sample points.
double ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

struct HistogramBin {
    double left = 0.0;
    double right = 0.0;
    std::size_t count = 0;
    double density = 0.0;
};

struct Histogram {
    std::vector<HistogramBin> bins;
    double width = 0.0;
};

/// Equal-width bins over [min, max] with densities normalized to integrate
/// to 1. All-equal samples get a unit-width range centred on the value.
/// Throws DomainError for bins < 1 or an empty sample.
Histogram histogram(const EmpiricalDistribution& emp, int bins);

}  // namespace fbmx
