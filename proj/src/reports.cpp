#include "fbmx/reports.hpp"

#include <cmath>

#include "fbmx/distributions.hpp"
#include "fbmx/error.hpp"
#include "fbmx/experiment.hpp"

namespace fbmx {

Fig1Report reproduce_fig1(std::size_t n, std::size_t paths, std::uint64_t seed, unsigned threads, int bins,
                          std::size_t curve_points) {
    if (n < 8) throw ConfigError("figure reproduction needs n >= 8");
    if (paths < 1) throw ConfigError("paths must be >= 1");

    ExperimentConfig cfg;
    cfg.grid = UniformGridSpec{n};
    cfg.hurst = ScheduledHurst{};
    cfg.paths = paths;
    cfg.seed = seed;
    cfg.threads = threads;

    Fig1Report rep;
    rep.n = n;
    rep.hurst = cfg.resolve_hurst().value();
    rep.paths = paths;
    rep.seed = seed;
    rep.samples = run_max_experiment(cfg);
    rep.mean = rep.samples.mean();
    rep.variance = rep.samples.variance();

    const long ln = static_cast<long>(n);
    const auto normal = normal_approx(ln);
    const auto dn = dn_law(ln);
    rep.dn_mean = dn_mean(ln);
    rep.normal_mean = std::sqrt(std::log(static_cast<double>(n)));
    rep.ks_normal = ks_empirical_vs_analytic(rep.samples, normal);
    rep.ks_dn = ks_empirical_vs_analytic(rep.samples, dn);
    rep.dn_better = rep.ks_dn < rep.ks_normal;

    rep.histogram = histogram(rep.samples, bins);
    const double lo = rep.histogram.bins.front().left;
    const double hi = rep.histogram.bins.back().right;
    rep.curves.reserve(curve_points);
    for (std::size_t k = 0; k < curve_points; ++k) {
        const double x = curve_points == 1
                             ? lo
                             : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(curve_points - 1);
        rep.curves.push_back({x, normal.pdf(x), dn.pdf(x)});
    }
    return rep;
}

SmallHReport small_h_limit_check(std::size_t n, double h, std::size_t paths, std::uint64_t seed,
                                 unsigned threads) {
    if (!(h > 0.0 && h <= 1e-3)) throw ConfigError("small-H check needs 0 < h <= 1e-3");
    if (n < 1 || n > 32) throw ConfigError("small-H check needs 1 <= n <= 32");
    ExperimentConfig cfg;
    cfg.grid = UniformGridSpec{n};
    cfg.hurst = FixedHurst{h};
    cfg.paths = paths;
    cfg.seed = seed;
    cfg.threads = threads;

    SmallHReport rep;
    rep.n = n;
    rep.hurst = h;
    rep.paths = paths;
    rep.samples = run_max_experiment(cfg);
    rep.ks = ks_empirical_vs_analytic(rep.samples, limit_law_h0(static_cast<long>(n)));
    rep.dkw_radius_99 = rep.samples.dkw_radius(0.01);
    return rep;
}

}  // namespace fbmx
