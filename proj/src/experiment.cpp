#include "fbmx/experiment.hpp"

#include <cmath>
#include <memory>
#include <thread>

#include "fbmx/comparison.hpp"
#include "fbmx/distributions.hpp"
#include "fbmx/error.hpp"
#include "fbmx/rng.hpp"

namespace fbmx {

double hurst_schedule(std::size_t n) {
    if (n <= 1) throw DomainError("H schedule (ln n)^-2 needs n >= 2");
    const double l = std::log(static_cast<double>(n));
    return std::min(1.0, 1.0 / (l * l));
}

unsigned resolve_thread_count(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

Grid ExperimentConfig::resolve_grid() const {
    if (const auto* u = std::get_if<UniformGridSpec>(&grid)) {
        if (u->n == 0) throw ConfigError("uniform grid needs n >= 1");
        return Grid::uniform(u->n);
    }
    return std::get<Grid>(grid);
}

Hurst ExperimentConfig::resolve_hurst() const {
    if (const auto* f = std::get_if<FixedHurst>(&hurst)) {
        if (!(f->h > 0.0 && f->h <= 1.0)) throw ConfigError("Hurst index must lie in (0,1]");
        return Hurst(f->h);
    }
    const std::size_t n = std::holds_alternative<UniformGridSpec>(grid) ? std::get<UniformGridSpec>(grid).n
                                                                        : std::get<Grid>(grid).size();
    if (n < 2) throw ConfigError("the (ln n)^-2 schedule needs n >= 2");
    return Hurst(hurst_schedule(n));
}

void ExperimentConfig::validate() const {
    if (paths < 1) throw ConfigError("paths must be >= 1");
    const Grid g = resolve_grid();
    (void)resolve_hurst();
    if (method == SamplerMethod::fft && !g.is_uniform())
        throw ConfigError("the fft sampler needs a uniform grid");
}

EmpiricalDistribution run_max_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    auto plan = std::make_shared<const FbmPathPlan>(cfg.resolve_grid(), cfg.resolve_hurst(), cfg.method);
    const std::uint64_t seed = cfg.seed;
    auto maxima = run_paths(cfg.paths, cfg.threads, [&plan, seed] {
        return [sampler = FbmPathSampler(plan), path = std::vector<double>(plan->grid().size()),
                seed](std::size_t p) mutable {
            RngStream rng(seed, p);
            sampler.sample(rng, path);
            return vector_max(path);
        };
    });
    return EmpiricalDistribution(std::move(maxima));
}

EmpiricalDistribution run_comparison_experiment(const ExperimentConfig& cfg, ComparisonVector which) {
    cfg.validate();
    const Grid grid = cfg.resolve_grid();
    const auto s = comparison_time_points(grid, cfg.resolve_hurst());
    const std::uint64_t seed = derive_seed(cfg.seed, kComparisonSeedTag);
    const std::size_t n = grid.size();
    auto maxima = run_paths(cfg.paths, cfg.threads, [&s, seed, n, which] {
        return [&s, seed, which, x = std::vector<double>(n), y = std::vector<double>(n),
                scratch = std::vector<double>(2 * n)](std::size_t p) mutable {
            RngStream rng(seed, p);
            sample_comparison_xy(s, rng, x, y, scratch);
            return vector_max(which == ComparisonVector::x ? x : y);
        };
    });
    return EmpiricalDistribution(std::move(maxima));
}

}  // namespace fbmx
