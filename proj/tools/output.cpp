#include "output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "fbmx/error.hpp"

namespace fbmx::cli {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    return out;
}

}  // namespace

void write_samples_csv(const std::filesystem::path& path, const EmpiricalDistribution& emp) {
    auto out = open_out(path);
    for (double v : emp.samples()) out << format_double(v) << '\n';
}

void write_histogram_csv(const std::filesystem::path& path, const Histogram& h) {
    auto out = open_out(path);
    out << "bin_left,bin_right,density\n";
    for (const auto& b : h.bins)
        out << format_double(b.left) << ',' << format_double(b.right) << ',' << format_double(b.density) << '\n';
}

void write_curves_csv(const std::filesystem::path& path, const std::vector<CurvePoint>& curves) {
    auto out = open_out(path);
    out << "x,normal_pdf,dn_pdf\n";
    for (const auto& c : curves)
        out << format_double(c.x) << ',' << format_double(c.normal_pdf) << ',' << format_double(c.dn_pdf) << '\n';
}

void write_law_csv(std::ostream& out, const AnalyticDistribution& law, double from, double to, double step) {
    const auto rows = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
    out << "x,cdf,pdf\n";
    for (long k = 0; k < rows; ++k) {
        const double x = from + static_cast<double>(k) * step;
        out << format_double(x) << ',' << format_double(law.cdf(x)) << ','
            << format_double(law.has_pdf() ? law.pdf(x) : NAN) << '\n';
    }
}

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& doc) {
    auto out = open_out(path);
    out << doc.dump(2) << '\n';
}

nlohmann::ordered_json Manifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["config"] = config;
    j["artifact_version"] = kArtifactVersion;
    j["seed"] = seed;
    j["outputs"] = outputs;
    j["wall_time"] = wall_time;
    return j;
}

}  // namespace fbmx::cli
