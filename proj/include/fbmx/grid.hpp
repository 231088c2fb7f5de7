#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace fbmx {

/// Strictly increasing sampling points t_1 < ... < t_n in (0,1], with the
/// implicit origin t_0 = 0.
class Grid {
public:
    /// Sorts the input; throws InvalidGrid on duplicates, empty input or
    /// points outside (0,1].
    explicit Grid(std::vector<double> points);

    /// The uniform grid {i/n : 1 <= i <= n}.
    static Grid uniform(std::size_t n);

    /// One point per line, decimal text, strictly increasing. Blank lines and
    /// lines starting with '#' are skipped. Anything else is rejected.
    static Grid parse(std::istream& in);
    static Grid read_file(const std::string& path);

    std::size_t size() const noexcept { return points_.size(); }
    std::span<const double> points() const noexcept { return points_; }
    double operator[](std::size_t i) const { return points_[i]; }

    /// True when the points coincide with {i/n} to 1e-12.
    bool is_uniform() const noexcept { return uniform_; }

private:
    Grid(std::vector<double> points, bool uniform);

    std::vector<double> points_;
    bool uniform_ = false;
};

/// min_i (t_i - t_{i-1}) with t_0 = 0.
double grid_min_spacing(const Grid& grid);

}  // namespace fbmx
