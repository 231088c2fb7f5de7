#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fbmx/comparison.hpp"
#include "fbmx/coupling.hpp"
#include "fbmx/dominance.hpp"
#include "fbmx/error.hpp"
#include "fbmx/experiment.hpp"
#include "fbmx/ks.hpp"
#include "fbmx/reports.hpp"
#include "fbmx/rng.hpp"

namespace fbmx::cli {

namespace {

// Pre-registered band for the small-H limit law (DKW noise plus H bias).
constexpr double kSmallHBand = 0.02;

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

Grid random_grid(RngStream& rng, std::size_t max_points) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.next_u64() % max_points);
    std::vector<double> pts;
    while (pts.size() < n) {
        const double t = 1.0 - rng.next_uniform();  // (0,1]
        if (std::find(pts.begin(), pts.end(), t) == pts.end()) pts.push_back(t);
    }
    return Grid(std::move(pts));
}

CheckResult check_slepian_cov(const VerifyOptions& opts) {
    RngStream rng(derive_seed(opts.seed, 11), 0);
    std::size_t grids = 0, pairs = 0;
    double worst_var = 0.0;
    double worst_margin = INFINITY;
    bool ok = true;
    for (int g = 0; g < 100; ++g) {
        const Grid grid = random_grid(rng, 64);
        for (double h : {0.01, 0.1, 0.5, 0.9}) {
            const auto rep = verify_slepian_covariance_order(grid, Hurst(h));
            ok = ok && rep.passed;
            worst_var = std::max(worst_var, rep.max_variance_gap);
            if (!rep.pairs.empty()) worst_margin = std::min(worst_margin, rep.min_margin);
            pairs += rep.pairs.size();
            ++grids;
        }
    }
    return {"slepian-cov", ok,
            std::to_string(grids) + " grid/H cases, " + std::to_string(pairs) +
                " pairs, max var gap " + fmt(worst_var) + ", min margin " + fmt(worst_margin)};
}

CheckResult check_gap_bound(const VerifyOptions&) {
    bool ok = true;
    std::ostringstream detail;
    for (std::size_t n : {2u, 64u, 1024u}) {
        for (double h : {0.02, 0.1}) {
            const auto rep = cov_gap_matrix(Grid::uniform(n), Hurst(h));
            const bool pass = rep.min_gap >= 0.0 && rep.max_gap <= rep.q_bound &&
                              rep.gaps.diagonal().cwiseAbs().maxCoeff() == 0.0;
            ok = ok && pass;
            detail << "n=" << n << ",H=" << h << ": max " << fmt(rep.max_gap) << " <= " << fmt(rep.q_bound)
                   << (pass ? "" : " FAIL") << "; ";
        }
    }
    return {"gap-bound", ok, detail.str()};
}

CheckResult check_dominance(const VerifyOptions& opts) {
    bool ok = true;
    std::ostringstream detail;
    for (std::size_t n : {64u, 256u}) {
        for (double h : {0.02, 0.05, 0.1}) {
            ExperimentConfig cfg;
            cfg.grid = UniformGridSpec{n};
            cfg.hurst = FixedHurst{h};
            cfg.paths = opts.paths;
            cfg.seed = opts.seed;
            cfg.threads = opts.threads;
            const auto fbm_max = run_max_experiment(cfg);
            const auto x_max = run_comparison_experiment(cfg, ComparisonVector::x);
            const auto rep = dominance_test(fbm_max, x_max, opts.alpha);
            ok = ok && rep.a_leq_b;
            detail << "n=" << n << ",H=" << h << ": viol " << fmt(rep.max_violation) << "/" << fmt(rep.allowed)
                   << (rep.a_leq_b ? "" : " FAIL") << "; ";
        }
    }
    return {"dominance", ok, detail.str()};
}

CheckResult check_gumbel_rate(const VerifyOptions&) {
    const auto small = gumbel_rate_check(1000);
    const auto large = gumbel_rate_check(1000000);
    const bool ok = small.ks <= kGumbelRateSlack * small.bound && large.ks <= kGumbelRateSlack * large.bound &&
                    large.ks < small.ks;
    return {"gumbel-rate", ok,
            "n=1e3: " + fmt(small.ks) + " <= " + fmt(kGumbelRateSlack * small.bound) + "; n=1e6: " +
                fmt(large.ks) + " <= " + fmt(kGumbelRateSlack * large.bound)};
}

CheckResult check_small_h(const VerifyOptions& opts) {
    const auto rep = small_h_limit_check(8, 1e-4, opts.paths, opts.seed, opts.threads);
    // the band is fixed; lower alpha widens it through the DKW term
    const double band = std::max(kSmallHBand, rep.samples.dkw_radius(opts.alpha));
    return {"small-h", rep.ks <= band, "KS " + fmt(rep.ks) + " <= " + fmt(band)};
}

CheckResult check_coupling(const VerifyOptions& opts) {
    const auto rep = counterexample_demo(std::max<std::size_t>(opts.paths, 1000), opts.seed, opts.alpha);
    const bool ok = rep.p_xz_above_1 == 0.0 && rep.p_yz_above_1 == 0.5 &&
                    std::fabs(rep.p_xz_above_1_empirical - rep.p_xz_above_1) <= 0.01 &&
                    std::fabs(rep.p_yz_above_1_empirical - rep.p_yz_above_1) <= 0.01 && rep.x_geq_st_y &&
                    !rep.raw_sum_dominance && rep.coupled_sum_dominance;
    return {"coupling", ok,
            "P(X+Z>1)=" + fmt(rep.p_xz_above_1_empirical) + ", P(Y+Z>1)=" + fmt(rep.p_yz_above_1_empirical) +
                ", raw order " + (rep.raw_sum_dominance ? "holds" : "fails") + ", coupled order " +
                (rep.coupled_sum_dominance ? "holds" : "fails")};
}

using CheckFn = CheckResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"slepian-cov", check_slepian_cov}, {"gap-bound", check_gap_bound},
        {"gumbel-rate", check_gumbel_rate}, {"small-h", check_small_h},
        {"dominance", check_dominance},     {"coupling", check_coupling},
    };
    return checks;
}

}  // namespace

const std::vector<std::string>& verification_checks() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    const auto& names = verification_checks();
    for (const auto& name : opts.only)
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw ConfigError("unknown check '" + name + "'");
    std::vector<CheckResult> results;
    for (const auto& [name, fn] : registry()) {
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), name) == opts.only.end())
            continue;
        results.push_back(fn(opts));
    }
    return results;
}

}  // namespace fbmx::cli
