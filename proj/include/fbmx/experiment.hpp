#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "fbmx/empirical.hpp"
#include "fbmx/fbm.hpp"
#include "fbmx/grid.hpp"

namespace fbmx {

/// H = (ln n)^{-2}, clamped to 1. Throws DomainError for n <= 1.
double hurst_schedule(std::size_t n);

struct UniformGridSpec {
    std::size_t n = 0;
};
using GridSpec = std::variant<UniformGridSpec, Grid>;

struct FixedHurst {
    double h = 0.5;
};
/// H = (ln n)^{-2} for the grid size n.
struct ScheduledHurst {};
using HurstSpec = std::variant<FixedHurst, ScheduledHurst>;

struct ExperimentConfig {
    GridSpec grid = UniformGridSpec{1};
    HurstSpec hurst = FixedHurst{0.5};
    std::size_t paths = 1;
    std::uint64_t seed = 0;
    SamplerMethod method = SamplerMethod::automatic;
    /// Worker threads; 0 means hardware concurrency. Never affects results.
    unsigned threads = 0;

    Grid resolve_grid() const;
    Hurst resolve_hurst() const;
    /// Throws ConfigError on an invalid combination.
    void validate() const;
};

/// Evaluates body(path_index) -> double for every path, splitting the index
/// range into contiguous blocks, one per worker. `make_worker` is called once
/// per worker thread and returns that worker's body.
template <class MakeWorker>
std::vector<double> run_paths(std::size_t paths, unsigned threads, MakeWorker&& make_worker);

/// Maximum of B^{H,tau} for path streams (seed, 0..paths-1).
EmpiricalDistribution run_max_experiment(const ExperimentConfig& cfg);

enum class ComparisonVector { x, y };

/// Seed tag for the comparison vectors, so they do not reuse the normals of
/// the fBM experiment with the same seed.
inline constexpr std::uint64_t kComparisonSeedTag = 0x58;

/// Maximum of X or Y over path streams (derive_seed(seed, tag), p). X and Y
/// runs with the same config are built from the same zeta and W.
EmpiricalDistribution run_comparison_experiment(const ExperimentConfig& cfg, ComparisonVector which);

unsigned resolve_thread_count(unsigned requested);

}  // namespace fbmx

#include "fbmx/experiment_impl.hpp"
