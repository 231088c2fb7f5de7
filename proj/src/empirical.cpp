#include "fbmx/empirical.hpp"

#include <algorithm>
#include <cmath>

#include "fbmx/error.hpp"

namespace fbmx {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples) : samples_(std::move(samples)) {
    std::sort(samples_.begin(), samples_.end());
}

double EmpiricalDistribution::ecdf(double x) const {
    if (samples_.empty()) return 0.0;
    const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
    return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double EmpiricalDistribution::quantile(double p) const {
    if (samples_.empty()) throw EmptyVector();
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("empirical quantile needs 0 < p <= 1");
    const double n = static_cast<double>(samples_.size());
    auto k = static_cast<std::size_t>(std::ceil(p * n));
    k = std::clamp<std::size_t>(k, 1, samples_.size());
    return samples_[k - 1];
}

double EmpiricalDistribution::mean() const {
    if (samples_.empty()) throw EmptyVector();
    double acc = 0.0;
    for (double v : samples_) acc += v;
    return acc / static_cast<double>(samples_.size());
}

double EmpiricalDistribution::variance() const {
    if (samples_.size() < 2) return 0.0;
    const double m = mean();
    double acc = 0.0;
    for (double v : samples_) acc += (v - m) * (v - m);
    return acc / static_cast<double>(samples_.size() - 1);
}

double EmpiricalDistribution::dkw_radius(double alpha) const { return fbmx::dkw_radius(count(), alpha); }

double ecdf(const EmpiricalDistribution& emp, double x) { return emp.ecdf(x); }

double dkw_radius(std::size_t count, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
    if (count == 0) throw EmptyVector();
    return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(count)));
}

double ks_empirical_vs_analytic(const EmpiricalDistribution& emp, const AnalyticDistribution& law) {
    const auto xs = emp.samples();
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = law.cdf(xs[i]);
        const double upper = static_cast<double>(i + 1) / n;
        const double lower = static_cast<double>(i) / n;
        d = std::max({d, std::fabs(upper - f), std::fabs(lower - f)});
    }
    return d;
}

double ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
    const auto xa = a.samples();
    const auto xb = b.samples();
    const double na = static_cast<double>(xa.size());
    const double nb = static_cast<double>(xb.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < xa.size() || j < xb.size()) {
        double x;
        if (j == xb.size() || (i < xa.size() && xa[i] <= xb[j]))
            x = xa[i];
        else
            x = xb[j];
        while (i < xa.size() && xa[i] <= x) ++i;
        while (j < xb.size() && xb[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

Histogram histogram(const EmpiricalDistribution& emp, int bins) {
    if (bins < 1) throw DomainError("histogram needs at least one bin");
    if (emp.empty()) throw EmptyVector();
    double lo = emp.min();
    double hi = emp.max();
    if (hi == lo) {
        lo -= 0.5;
        hi += 0.5;
    }
    Histogram h;
    h.width = (hi - lo) / bins;
    h.bins.resize(static_cast<std::size_t>(bins));
    for (int k = 0; k < bins; ++k) {
        h.bins[static_cast<std::size_t>(k)].left = lo + k * h.width;
        h.bins[static_cast<std::size_t>(k)].right = k + 1 == bins ? hi : lo + (k + 1) * h.width;
    }
    for (double v : emp.samples()) {
        auto k = static_cast<long>((v - lo) / h.width);
        k = std::clamp<long>(k, 0, bins - 1);
        ++h.bins[static_cast<std::size_t>(k)].count;
    }
    const double n = static_cast<double>(emp.count());
    for (auto& bin : h.bins) bin.density = static_cast<double>(bin.count) / (n * h.width);
    return h;
}

}  // namespace fbmx
