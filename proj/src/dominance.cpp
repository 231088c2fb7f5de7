#include "fbmx/dominance.hpp"

#include <algorithm>
#include <cmath>

#include "fbmx/error.hpp"

namespace fbmx {

std::string_view to_string(DominanceDirection d) {
    switch (d) {
        case DominanceDirection::a_st_leq_b: return "A_st_leq_B";
        case DominanceDirection::b_st_leq_a: return "B_st_leq_A";
        case DominanceDirection::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

DominanceReport dominance_test(const EmpiricalDistribution& a, const EmpiricalDistribution& b, double alpha,
                               DominanceTolerance tolerance) {
    if (a.empty() || b.empty()) throw EmptyVector();
    DominanceReport rep;
    if (tolerance == DominanceTolerance::dkw_sum) {
        rep.allowed = a.dkw_radius(alpha) + b.dkw_radius(alpha);
    } else {
        if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
        const double m = static_cast<double>(a.count()), n = static_cast<double>(b.count());
        rep.allowed = std::sqrt(std::log(1.0 / alpha) * (m + n) / (2.0 * m * n));
    }

    // sweep the pooled sample points; both ECDFs are step functions that only
    // change there
    const auto xa = a.samples();
    const auto xb = b.samples();
    const double na = static_cast<double>(xa.size());
    const double nb = static_cast<double>(xb.size());
    std::size_t i = 0, j = 0;
    while (i < xa.size() || j < xb.size()) {
        const double x = (j == xb.size() || (i < xa.size() && xa[i] <= xb[j])) ? xa[i] : xb[j];
        while (i < xa.size() && xa[i] <= x) ++i;
        while (j < xb.size() && xb[j] <= x) ++j;
        const double fa = static_cast<double>(i) / na;
        const double fb = static_cast<double>(j) / nb;
        rep.max_violation = std::max(rep.max_violation, fb - fa);
        rep.reverse_violation = std::max(rep.reverse_violation, fa - fb);
    }

    rep.a_leq_b = rep.max_violation <= rep.allowed;
    rep.b_leq_a = rep.reverse_violation <= rep.allowed;
    if (rep.a_leq_b)
        rep.direction = DominanceDirection::a_st_leq_b;
    else if (rep.b_leq_a)
        rep.direction = DominanceDirection::b_st_leq_a;

    for (double level : {0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99})
        rep.details.push_back({level, a.quantile(level), b.quantile(level)});
    return rep;
}

}  // namespace fbmx
