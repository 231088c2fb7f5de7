#include "fbmx/distributions.hpp"

#include <algorithm>
#include <cmath>

#include "fbmx/error.hpp"
#include "fbmx/normal.hpp"
#include "fbmx/quadrature.hpp"

namespace fbmx {

namespace {

// Smoothing densities are truncated where they fall below this level.
constexpr double kDensityTail = 1e-12;

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, std::fabs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

// Half-width of the standard normal density above kDensityTail.
double normal_tail_cut() {
    static const double cut = std::sqrt(-2.0 * std::log(kDensityTail / kInvSqrt2Pi));
    return cut;
}

// Interval where the standard Gumbel density exceeds kDensityTail.
Interval gumbel_tail_cut() {
    static const Interval cut = [] {
        const double level = std::log(kDensityTail);
        auto log_density_minus_level = [level](double u) { return -u - std::exp(-u) - level; };
        // log density peaks at u = 0 and is monotone on either side
        const double lo = bisect([&](double u) { return log_density_minus_level(u); }, -10.0, 0.0);
        const double hi = bisect([&](double u) { return -log_density_minus_level(u); }, 0.0, 60.0);
        return Interval{lo, hi};
    }();
    return cut;
}

Interval gumbel_type_support(double a, double b) { return {b - 10.0 / a, b + 25.0 / a}; }

}  // namespace

AnalyticDistribution::AnalyticDistribution(std::string name, Function cdf, std::optional<Function> pdf,
                                           Interval support_hint)
    : name_(std::move(name)), cdf_(std::move(cdf)), pdf_(std::move(pdf)), support_(support_hint) {}

double AnalyticDistribution::pdf(double x) const {
    if (!pdf_) throw Error("distribution '" + name_ + "' has no density");
    return (*pdf_)(x);
}

double vector_max(std::span<const double> v) {
    if (v.empty()) throw EmptyVector();
    return *std::max_element(v.begin(), v.end());
}

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }
double gumbel_pdf(double x) { return std::exp(-x - std::exp(-x)); }

NormSeq norm_seq(long n, NormSeqKind kind) {
    if (n <= 2) throw DegenerateNormalization(n);
    const double dn = static_cast<double>(n);
    NormSeq seq;
    seq.n = n;
    seq.kind = kind;
    if (kind == NormSeqKind::quantile) {
        // Phi^{-1}(1 - 1/n) = -Phi^{-1}(1/n); the right side avoids rounding 1 - 1/n
        seq.b_n = -std_normal_quantile(1.0 / dn);
        seq.a_n = seq.b_n + 1.0 / seq.b_n;
    } else {
        const double root = std::sqrt(2.0 * std::log(dn));
        seq.a_n = root;
        seq.b_n = root - (std::log(std::log(dn)) + std::log(4.0 * kPi)) / (2.0 * root);
    }
    return seq;
}

AnalyticDistribution normal_law(double mean, double sd) {
    if (!(sd > 0.0)) throw DomainError("normal law needs sd > 0");
    return AnalyticDistribution(
        "normal", [mean, sd](double x) { return std_normal_cdf((x - mean) / sd); },
        [mean, sd](double x) { return std_normal_pdf((x - mean) / sd) / sd; },
        Interval{mean - 8.0 * sd, mean + 8.0 * sd});
}

AnalyticDistribution gumbel_law() {
    return AnalyticDistribution("gumbel", gumbel_cdf, AnalyticDistribution::Function(gumbel_pdf),
                                gumbel_type_support(1.0, 0.0));
}

AnalyticDistribution scaled_gumbel(const NormSeq& seq) {
    const double a = seq.a_n, b = seq.b_n;
    return AnalyticDistribution(
        "scaled_gumbel", [a, b](double x) { return gumbel_cdf(a * (x - b)); },
        [a, b](double x) { return a * gumbel_pdf(a * (x - b)); }, gumbel_type_support(a, b));
}

AnalyticDistribution limit_law_h0(long n) {
    if (n < 1) throw DomainError("limit law needs n >= 1");
    const double dn = static_cast<double>(n);
    const double cut = normal_tail_cut();
    auto cdf = [dn, cut](double x) {
        const double y = kSqrt2 * x;
        const double v = integrate(
            [dn, y](double z) { return std_normal_cdf_pow(y - z, dn) * std_normal_pdf(z); }, -cut, cut,
            kConvolutionTolerance);
        return std::clamp(v, 0.0, 1.0);
    };
    auto pdf = [dn, cut](double x) {
        const double y = kSqrt2 * x;
        return kSqrt2 * dn *
               integrate(
                   [dn, y](double z) {
                       return std_normal_cdf_pow(y - z, dn - 1.0) * std_normal_pdf(y - z) * std_normal_pdf(z);
                   },
                   -cut, cut, kConvolutionTolerance);
    };
    // max of n normals lies in [-8, sf^{-1}(1e-12 / n)] up to 1e-12; add the
    // normal's [-8, 8] and rescale
    const double max_high = -std_normal_quantile(1e-12 / dn);
    return AnalyticDistribution("limit_h0", cdf, AnalyticDistribution::Function(pdf),
                                Interval{(-8.0 - 8.0) / kSqrt2, (max_high + 8.0) / kSqrt2});
}

AnalyticDistribution normal_approx(long n) {
    if (n < 2) throw DomainError("normal approximation needs n >= 2");
    auto law = normal_law(std::sqrt(std::log(static_cast<double>(n))), std::sqrt(0.5));
    return AnalyticDistribution("normal_approx", [law](double x) { return law.cdf(x); },
                                AnalyticDistribution::Function([law](double x) { return law.pdf(x); }),
                                law.support_hint());
}

AnalyticDistribution dn_law(long n) {
    const NormSeq seq = norm_seq(n, NormSeqKind::quantile);
    const double a = seq.a_n, b = seq.b_n;
    const Interval u = gumbel_tail_cut();
    auto cdf = [a, b, u](double x) {
        const double y = kSqrt2 * x - b;
        const double v =
            integrate([a, y](double g) { return std_normal_cdf(y - g / a) * gumbel_pdf(g); }, u.low, u.high,
                      kConvolutionTolerance);
        return std::clamp(v, 0.0, 1.0);
    };
    auto pdf = [a, b, u](double x) {
        const double y = kSqrt2 * x - b;
        return kSqrt2 * integrate([a, y](double g) { return std_normal_pdf(y - g / a) * gumbel_pdf(g); },
                                  u.low, u.high, kConvolutionTolerance);
    };
    const Interval g = gumbel_type_support(a, b);
    return AnalyticDistribution("dn", cdf, AnalyticDistribution::Function(pdf),
                                Interval{(g.low - 8.0) / kSqrt2, (g.high + 8.0) / kSqrt2});
}

double dn_mean(long n) {
    const NormSeq seq = norm_seq(n, NormSeqKind::quantile);
    return (seq.b_n + kEulerGamma / seq.a_n) / kSqrt2;
}

AnalyticDistribution normalized_normal_max(const NormSeq& seq) {
    const double a = seq.a_n, b = seq.b_n, dn = static_cast<double>(seq.n);
    return AnalyticDistribution(
        "normalized_normal_max", [a, b, dn](double x) { return std_normal_cdf_pow(b + x / a, dn); },
        [a, b, dn](double x) {
            const double y = b + x / a;
            return dn / a * std_normal_cdf_pow(y, dn - 1.0) * std_normal_pdf(y);
        },
        gumbel_type_support(1.0, 0.0));
}

double distribution_mean(const AnalyticDistribution& d, double abs_tol) {
    const Interval s = d.support_hint();
    return integrate([&d](double x) { return x * d.pdf(x); }, s.low, s.high, abs_tol, 64);
}

}  // namespace fbmx
