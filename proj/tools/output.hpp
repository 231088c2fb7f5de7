#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fbmx/distributions.hpp"
#include "fbmx/empirical.hpp"
#include "fbmx/reports.hpp"

namespace fbmx::cli {

inline constexpr const char* kArtifactVersion = FBMX_VERSION;

/// Shortest text with 17 significant digits, '.' decimal point, no locale.
std::string format_double(double v);

void write_samples_csv(const std::filesystem::path& path, const EmpiricalDistribution& emp);
void write_histogram_csv(const std::filesystem::path& path, const Histogram& h);
void write_curves_csv(const std::filesystem::path& path, const std::vector<CurvePoint>& curves);
void write_law_csv(std::ostream& out, const AnalyticDistribution& law, double from, double to, double step);
void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& doc);

struct Manifest {
    std::string command;
    nlohmann::ordered_json config;
    std::uint64_t seed = 0;
    std::vector<std::string> outputs;
    double wall_time = 0.0;

    nlohmann::ordered_json to_json() const;
};

}  // namespace fbmx::cli
