#include "fbmx/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "fbmx/error.hpp"

namespace fbmx {

namespace {

bool matches_uniform(const std::vector<double>& pts) {
    const double n = static_cast<double>(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (std::fabs(pts[i] - static_cast<double>(i + 1) / n) > 1e-12) return false;
    return true;
}

void check_range(const std::vector<double>& pts) {
    if (pts.empty()) throw InvalidGrid("grid must contain at least one point");
    for (double t : pts)
        if (!(t > 0.0 && t <= 1.0))
            throw InvalidGrid("grid point " + std::to_string(t) + " is outside (0,1]");
}

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
    check_range(points_);
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
        throw InvalidGrid("grid contains duplicate points");
    uniform_ = matches_uniform(points_);
}

Grid::Grid(std::vector<double> points, bool uniform) : points_(std::move(points)), uniform_(uniform) {}

Grid Grid::uniform(std::size_t n) {
    if (n == 0) throw InvalidGrid("uniform grid needs n >= 1");
    std::vector<double> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<double>(i + 1) / static_cast<double>(n);
    return Grid(std::move(pts), true);
}

Grid Grid::parse(std::istream& in) {
    std::vector<double> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size())
            throw InvalidGrid("line " + std::to_string(lineno) + ": not a number");
        if (!pts.empty() && !(v > pts.back()))
            throw InvalidGrid("line " + std::to_string(lineno) + ": points must be strictly increasing");
        pts.push_back(v);
    }
    return Grid(std::move(pts));
}

Grid Grid::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidGrid("cannot open grid file " + path);
    return parse(in);
}

double grid_min_spacing(const Grid& grid) {
    double prev = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (double t : grid.points()) {
        best = std::min(best, t - prev);
        prev = t;
    }
    return best;
}

}  // namespace fbmx
