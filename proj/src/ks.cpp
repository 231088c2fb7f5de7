#include "fbmx/ks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fbmx/error.hpp"

namespace fbmx {

KsDistance ks_analytic(const AnalyticDistribution& f, const AnalyticDistribution& g, std::size_t grid_size) {
    if (grid_size < 1000) throw DomainError("ks_analytic needs grid_size >= 1000");
    const double lo = std::min(f.support_hint().low, g.support_hint().low);
    const double hi = std::max(f.support_hint().high, g.support_hint().high);
    const double step = (hi - lo) / static_cast<double>(grid_size - 1);
    auto gap = [&](double x) { return std::fabs(f.cdf(x) - g.cdf(x)); };

    KsDistance out;
    out.grid_step = step;
    std::size_t best = 0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double x = lo + step * static_cast<double>(i);
        const double v = gap(x);
        if (v > out.value) {
            out.value = v;
            best = i;
        }
    }
    out.argmax = lo + step * static_cast<double>(best);

    // golden-section on the bracketing cells
    constexpr double kInvPhi = 0.61803398874989484820;
    double a = std::max(lo, out.argmax - step);
    double b = std::min(hi, out.argmax + step);
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double gc = gap(c), gd = gap(d);
    for (int it = 0; it < 80 && b - a > 1e-13; ++it) {
        if (gc > gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - kInvPhi * (b - a);
            gc = gap(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + kInvPhi * (b - a);
            gd = gap(d);
        }
    }
    const double x = 0.5 * (a + b);
    const double v = gap(x);
    if (v > out.value) {
        out.value = v;
        out.argmax = x;
    }
    return out;
}

GumbelRate gumbel_rate_check(long n, NormSeqKind kind) {
    const NormSeq seq = norm_seq(n, kind);
    GumbelRate r;
    r.ks = ks_analytic(normalized_normal_max(seq), gumbel_law(), 20000).value;
    r.bound = 1.0 / (3.0 * std::log(static_cast<double>(n)));
    return r;
}

}  // namespace fbmx
