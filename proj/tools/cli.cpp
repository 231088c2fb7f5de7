#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "fbmx/coupling.hpp"
#include "fbmx/distributions.hpp"
#include "fbmx/error.hpp"
#include "fbmx/experiment.hpp"
#include "fbmx/reports.hpp"
#include "output.hpp"
#include "verify.hpp"

namespace fbmx::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kFallbackSeed = 1;
constexpr const char* kSeedEnv = "FBM_EXTREMES_SEED";

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv(kSeedEnv)) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw ConfigError(std::string(kSeedEnv) + " is not an unsigned integer");
    }
    return kFallbackSeed;
}

struct Fig1Args {
    std::size_t n = 0;
    std::size_t paths = 100000;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
    unsigned threads = 0;
    int bins = kFigureBins;
};

int cmd_fig1(const Fig1Args& a, std::ostream& out) {
    const auto start = Clock::now();
    const std::uint64_t seed = resolve_seed(a.seed);
    if (a.bins < 1) throw ConfigError("--bins must be >= 1");
    const Fig1Report rep = reproduce_fig1(a.n, a.paths, seed, a.threads, a.bins);

    const fs::path dir(a.out_dir);
    const std::string stem = "fig1_n" + std::to_string(a.n);
    const fs::path samples = dir / (stem + "_samples.csv");
    const fs::path hist = dir / (stem + "_histogram.csv");
    const fs::path curves = dir / (stem + "_curves.csv");
    const fs::path summary = dir / (stem + "_summary.json");
    const fs::path manifest = dir / (stem + "_manifest.json");
    write_samples_csv(samples, rep.samples);
    write_histogram_csv(hist, rep.histogram);
    write_curves_csv(curves, rep.curves);

    json s;
    s["artifact_version"] = kArtifactVersion;
    s["n"] = rep.n;
    s["hurst"] = rep.hurst;
    s["paths"] = rep.paths;
    s["seed"] = rep.seed;
    s["mean"] = rep.mean;
    s["variance"] = rep.variance;
    s["ks_normal"] = rep.ks_normal;
    s["ks_dn"] = rep.ks_dn;
    s["dn_mean"] = rep.dn_mean;
    s["normal_mean"] = rep.normal_mean;
    s["runtime_seconds"] = seconds_since(start);
    write_json(summary, s);

    Manifest m;
    m.command = "fig1";
    m.config = {{"grid", {{"uniform", a.n}}}, {"hurst", {{"schedule", "inverse_log_squared"}, {"value", rep.hurst}}},
                {"paths", a.paths}, {"method", "auto"}, {"bins", a.bins}};
    m.seed = seed;
    m.outputs = {samples.string(), hist.string(), curves.string(), summary.string()};
    m.wall_time = seconds_since(start);
    write_json(manifest, m.to_json());

    out << "n=" << rep.n << " H=" << rep.hurst << " paths=" << rep.paths << " mean=" << rep.mean
        << " ks_dn=" << rep.ks_dn << " ks_normal=" << rep.ks_normal << '\n';
    return rep.dn_better ? kSuccess : kCheckFailed;
}

struct SimulateArgs {
    std::optional<std::size_t> uniform;
    std::string grid_file;
    std::optional<double> hurst;
    bool schedule = false;
    std::size_t paths = 1000;
    std::optional<std::uint64_t> seed;
    std::string method = "auto";
    std::string out_dir = ".";
    unsigned threads = 0;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    ExperimentConfig cfg;
    json grid_echo;
    if (a.uniform) {
        cfg.grid = UniformGridSpec{*a.uniform};
        grid_echo = {{"uniform", *a.uniform}};
    } else {
        cfg.grid = Grid::read_file(a.grid_file);
        grid_echo = {{"file", a.grid_file}, {"points", std::get<Grid>(cfg.grid).size()}};
    }
    if (a.schedule)
        cfg.hurst = ScheduledHurst{};
    else
        cfg.hurst = FixedHurst{*a.hurst};
    cfg.paths = a.paths;
    cfg.seed = resolve_seed(a.seed);
    cfg.method = parse_sampler_method(a.method);
    cfg.threads = a.threads;
    cfg.validate();
    const double h = cfg.resolve_hurst().value();

    const auto emp = run_max_experiment(cfg);
    const fs::path dir(a.out_dir);
    const fs::path samples = dir / "samples.csv";
    const fs::path manifest = dir / "manifest.json";
    write_samples_csv(samples, emp);

    Manifest m;
    m.command = "simulate";
    json hurst_echo = {{"value", h}};
    if (a.schedule) hurst_echo["schedule"] = "inverse_log_squared";
    m.config = {{"grid", grid_echo}, {"hurst", hurst_echo}, {"paths", a.paths}, {"method", a.method}};
    m.seed = cfg.seed;
    m.outputs = {samples.string()};
    m.wall_time = seconds_since(start);
    write_json(manifest, m.to_json());

    out << emp.count() << " samples written to " << samples.string() << " (H=" << h << ")\n";
    return kSuccess;
}

int cmd_verify(VerifyOptions opts, const std::optional<std::uint64_t>& seed, std::ostream& out) {
    opts.seed = resolve_seed(seed);
    if (!(opts.alpha > 0.0 && opts.alpha < 1.0)) throw ConfigError("--alpha must lie in (0,1)");
    const auto results = run_verification(opts);
    bool all = true;
    for (const auto& r : results) {
        out << std::left << std::setw(12) << r.name << ' ' << (r.passed ? "PASS" : "FAIL") << "  " << r.detail
            << '\n';
        all = all && r.passed;
    }
    return all ? kSuccess : kCheckFailed;
}

struct ApproxArgs {
    long n = 0;
    std::string law = "dn";
    double from = -2.0;
    double to = 6.0;
    double step = 0.01;
    std::string out_file;
};

int cmd_approx(const ApproxArgs& a, std::ostream& out) {
    if (!(a.step > 0.0) || a.to < a.from) throw ConfigError("need --step > 0 and --to >= --from");
    std::optional<AnalyticDistribution> law;
    if (a.law == "normal")
        law = normal_approx(a.n);
    else if (a.law == "dn")
        law = dn_law(a.n);
    else if (a.law == "limit")
        law = limit_law_h0(a.n);
    else if (a.law == "scaled-gumbel")
        law = scaled_gumbel(norm_seq(a.n, NormSeqKind::quantile));
    else
        throw ConfigError("unknown law '" + a.law + "'");

    if (a.out_file.empty()) {
        write_law_csv(out, *law, a.from, a.to, a.step);
    } else {
        std::ofstream f(a.out_file, std::ios::binary);
        if (!f) throw ConfigError("cannot write " + a.out_file);
        write_law_csv(f, *law, a.from, a.to, a.step);
    }
    return kSuccess;
}

int cmd_coupling_demo(std::size_t draws, const std::optional<std::uint64_t>& seed, double alpha,
                      std::ostream& out) {
    const auto rep = counterexample_demo(draws, resolve_seed(seed), alpha);
    json j;
    j["artifact_version"] = kArtifactVersion;
    j["draws"] = rep.draws;
    j["seed"] = rep.seed;
    j["p_x_plus_z_above_1"] = rep.p_xz_above_1;
    j["p_y_plus_z_above_1"] = rep.p_yz_above_1;
    j["p_x_plus_z_above_1_empirical"] = rep.p_xz_above_1_empirical;
    j["p_y_plus_z_above_1_empirical"] = rep.p_yz_above_1_empirical;
    j["x_geq_st_y"] = rep.x_geq_st_y;
    j["raw_sum_dominance"] = rep.raw_sum_dominance;
    j["coupled_sum_dominance"] = rep.coupled_sum_dominance;
    out << j.dump(2) << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maxima of fractional Brownian motion on finite grids for small Hurst index"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kArtifactVersion));

    Fig1Args fig1;
    auto* fig1_cmd = app.add_subcommand("fig1", "Histogram of the grid maximum against the normal and D_n laws");
    fig1_cmd->add_option("--n", fig1.n, "Grid size (uniform grid {i/n})")->required();
    fig1_cmd->add_option("--paths", fig1.paths, "Simulated paths")->capture_default_str();
    fig1_cmd->add_option("--seed", fig1.seed, "Seed (default: $FBM_EXTREMES_SEED or 1)");
    fig1_cmd->add_option("--out-dir", fig1.out_dir, "Output directory")->capture_default_str();
    fig1_cmd->add_option("--threads", fig1.threads, "Worker threads (0 = all cores)");
    fig1_cmd->add_option("--bins", fig1.bins, "Histogram bins")->capture_default_str();

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Sample the grid maximum of fBM");
    auto* uni = sim_cmd->add_option("--uniform", sim.uniform, "Uniform grid {i/n}");
    auto* gf = sim_cmd->add_option("--grid-file", sim.grid_file, "Grid file, one increasing point per line");
    uni->excludes(gf);
    gf->excludes(uni);
    auto* hurst = sim_cmd->add_option("--hurst", sim.hurst, "Hurst index in (0,1]");
    auto* sched = sim_cmd->add_flag("--schedule", sim.schedule, "Use H = (ln n)^-2");
    hurst->excludes(sched);
    sched->excludes(hurst);
    sim_cmd->add_option("--paths", sim.paths, "Simulated paths")->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed, "Seed (default: $FBM_EXTREMES_SEED or 1)");
    sim_cmd->add_option("--method", sim.method, "auto | cholesky | fft")->capture_default_str();
    sim_cmd->add_option("--out-dir", sim.out_dir, "Output directory")->capture_default_str();
    sim_cmd->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");

    VerifyOptions ver;
    std::optional<std::uint64_t> ver_seed;
    auto* ver_cmd = app.add_subcommand("verify", "Run the covariance, rate, dominance and coupling checks");
    ver_cmd->add_option("--only", ver.only, "Run only the named checks")
        ->check(CLI::IsMember(verification_checks()));
    ver_cmd->add_option("--alpha", ver.alpha, "Significance level for statistical checks")->capture_default_str();
    ver_cmd->add_option("--paths", ver.paths, "Paths per Monte Carlo check")->capture_default_str();
    ver_cmd->add_option("--seed", ver_seed, "Seed (default: $FBM_EXTREMES_SEED or 1)");
    ver_cmd->add_option("--threads", ver.threads, "Worker threads (0 = all cores)");

    ApproxArgs approx;
    auto* approx_cmd = app.add_subcommand("approx", "Tabulate an approximating law to CSV (x, cdf, pdf)");
    approx_cmd->add_option("--n", approx.n, "Grid size")->required();
    approx_cmd->add_option("--law", approx.law, "normal | dn | limit | scaled-gumbel")->capture_default_str();
    approx_cmd->add_option("--from", approx.from)->capture_default_str();
    approx_cmd->add_option("--to", approx.to)->capture_default_str();
    approx_cmd->add_option("--step", approx.step)->capture_default_str();
    approx_cmd->add_option("--out", approx.out_file, "Output file (default: stdout)");

    std::size_t demo_draws = 100000;
    std::optional<std::uint64_t> demo_seed;
    double demo_alpha = 0.01;
    auto* demo_cmd = app.add_subcommand("coupling-demo", "Counterexample for adding a dependent variable");
    demo_cmd->add_option("--draws", demo_draws)->capture_default_str();
    demo_cmd->add_option("--seed", demo_seed, "Seed (default: $FBM_EXTREMES_SEED or 1)");
    demo_cmd->add_option("--alpha", demo_alpha)->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*fig1_cmd) return cmd_fig1(fig1, out);
        if (*sim_cmd) {
            if (!sim.uniform && sim.grid_file.empty())
                throw ConfigError("simulate needs --uniform or --grid-file");
            if (!sim.hurst && !sim.schedule) throw ConfigError("simulate needs --hurst or --schedule");
            return cmd_simulate(sim, out);
        }
        if (*ver_cmd) return cmd_verify(ver, ver_seed, out);
        if (*approx_cmd) return cmd_approx(approx, out);
        if (*demo_cmd) return cmd_coupling_demo(demo_draws, demo_seed, demo_alpha, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidGrid& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DegenerateNormalization& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsageError;
}

}  // namespace fbmx::cli
