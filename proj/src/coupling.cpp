#include "fbmx/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fbmx/error.hpp"
#include "fbmx/normal.hpp"
#include "fbmx/rng.hpp"

namespace fbmx {

namespace {

constexpr double kInitialBracket = 64.0;
constexpr double kMaxBracket = 1024.0;  // 2^10

// A = Y' + Z against B = X + Z, paired by index
DominanceReport coupled_sum_test(std::span<const double> x, const std::vector<double>& y_coupled,
                                 std::span<const double> z, double alpha) {
    std::vector<double> xz(x.size()), yz(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        xz[i] = x[i] + z[i];
        yz[i] = y_coupled[i] + z[i];
    }
    return dominance_test(EmpiricalDistribution(std::move(yz)), EmpiricalDistribution(std::move(xz)), alpha);
}

}  // namespace

CdfObject CdfObject::from(const AnalyticDistribution& d) {
    return CdfObject{[d](double x) { return d.cdf(x); }, std::nullopt};
}

CdfObject CdfObject::normal(double mean, double sd) {
    return CdfObject{[mean, sd](double x) { return std_normal_cdf((x - mean) / sd); },
                     [mean, sd](double p) { return mean + sd * std_normal_quantile(p); }};
}

CdfObject CdfObject::uniform01() {
    return CdfObject{[](double x) { return std::clamp(x, 0.0, 1.0); }, [](double p) { return p; }};
}

CdfObject CdfObject::point_mass(double at) {
    return CdfObject{[at](double x) { return x >= at ? 1.0 : 0.0; }, std::nullopt};
}

double generalized_inverse(const CdfObject& c, double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("generalized inverse needs 0 < p < 1");
    if (c.inv) return (*c.inv)(p);

    double half = kInitialBracket;
    while (!(c.cdf(-half) < p && c.cdf(half) >= p)) {
        half *= 2.0;
        if (half > kMaxBracket)
            throw BracketFailure("no bracket for level " + std::to_string(p) + " within [-1024, 1024]");
    }
    // invariant: F(lo) < p <= F(hi)
    double lo = -half, hi = half;
    for (int it = 0; it < 2000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (c.cdf(mid) >= p ? hi : lo) = mid;
    }
    return hi;
}

std::vector<double> monotone_coupling(std::span<const double> x_samples, const CdfObject& fx,
                                      const CdfObject& fy) {
    std::vector<double> out(x_samples.size());
    for (std::size_t i = 0; i < x_samples.size(); ++i) {
        const double p = std::clamp(fx.cdf(x_samples[i]), kCouplingNudge, 1.0 - kCouplingNudge);
        out[i] = generalized_inverse(fy, p);
    }
    return out;
}

std::vector<double> empirical_monotone_coupling(std::span<const double> x_samples,
                                                const EmpiricalDistribution& y_law) {
    const std::size_t n = x_samples.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return x_samples[a] < x_samples[b]; });
    std::vector<double> out(n);
    const double dn = static_cast<double>(n);
    std::size_t r = 0;
    while (r < n) {
        std::size_t e = r;
        while (e + 1 < n && x_samples[order[e + 1]] == x_samples[order[r]]) ++e;
        // ranks r+1..e+1 share the mean midpoint position
        const double position = (0.5 * static_cast<double>(r + e + 2) - 0.5) / dn;
        const double y = y_law.quantile(std::clamp(position, kCouplingNudge, 1.0));
        for (std::size_t k = r; k <= e; ++k) out[order[k]] = y;
        r = e + 1;
    }
    return out;
}

DominanceReport shifted_sum_dominance(std::span<const double> x, std::span<const double> y,
                                      std::span<const double> z, double alpha) {
    if (x.size() != z.size()) throw Error("x and z must be paired samples of equal length");
    if (x.empty() || y.empty()) throw EmptyVector();
    return coupled_sum_test(x, empirical_monotone_coupling(x, EmpiricalDistribution({y.begin(), y.end()})), z,
                            alpha);
}

DominanceReport shifted_sum_dominance(std::span<const double> x, std::span<const double> z, const CdfObject& fx,
                                      const CdfObject& fy, double alpha) {
    if (x.size() != z.size()) throw Error("x and z must be paired samples of equal length");
    if (x.empty()) throw EmptyVector();
    return coupled_sum_test(x, monotone_coupling(x, fx, fy), z, alpha);
}

CounterexampleReport counterexample_demo(std::size_t draws, std::uint64_t seed, double alpha) {
    CounterexampleReport rep;
    rep.p_xz_above_1 = 0.0;
    rep.p_yz_above_1 = 0.5;
    rep.draws = draws;
    rep.seed = seed;
    if (draws == 0) return rep;

    RngStream rng(seed, 0);
    std::vector<double> x(draws), y(draws), z(draws), xz(draws), yz(draws);
    std::size_t xz_above = 0, yz_above = 0;
    for (std::size_t i = 0; i < draws; ++i) {
        // dyadic uniforms k 2^-53 keep 1 - x and x + (1 - x) exact
        const std::uint64_t k = std::max<std::uint64_t>(rng.next_u64() >> 11, 1);
        x[i] = static_cast<double>(k) * 0x1p-53;
        y[i] = 1.0 - x[i];
        z[i] = y[i];
        xz[i] = x[i] + z[i];
        yz[i] = y[i] + z[i];
        if (xz[i] > 1.0) ++xz_above;
        if (yz[i] > 1.0) ++yz_above;
    }
    rep.p_xz_above_1_empirical = static_cast<double>(xz_above) / static_cast<double>(draws);
    rep.p_yz_above_1_empirical = static_cast<double>(yz_above) / static_cast<double>(draws);

    const EmpiricalDistribution ex(x), ey(y);
    rep.x_geq_st_y = dominance_test(ey, ex, alpha).a_leq_b;
    rep.raw_sum_dominance =
        dominance_test(EmpiricalDistribution(yz), EmpiricalDistribution(xz), alpha).a_leq_b;
    rep.coupled_sum_dominance =
        shifted_sum_dominance(x, z, CdfObject::uniform01(), CdfObject::uniform01(), alpha).a_leq_b;
    return rep;
}

}  // namespace fbmx
