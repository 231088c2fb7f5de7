#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

namespace fbmx {

struct Interval {
    double low = 0.0;
    double high = 0.0;
};

/// Immutable CDF/PDF pair with a support interval used to truncate
/// quadrature and KS searches. Cheap to copy; safe to share across threads.
class AnalyticDistribution {
public:
    using Function = std::function<double(double)>;

    AnalyticDistribution(std::string name, Function cdf, std::optional<Function> pdf, Interval support_hint);

    const std::string& name() const noexcept { return name_; }
    double cdf(double x) const { return cdf_(x); }
    bool has_pdf() const noexcept { return pdf_.has_value(); }
    /// Throws Error if no density was supplied.
    double pdf(double x) const;
    Interval support_hint() const noexcept { return support_; }

private:
    std::string name_;
    Function cdf_;
    std::optional<Function> pdf_;
    Interval support_;
};

/// Largest component. Throws EmptyVector.
double vector_max(std::span<const double> v);

/// Gumbel distribution function exp(-exp(-x)).
double gumbel_cdf(double x);
double gumbel_pdf(double x);

enum class NormSeqKind {
    classical,  ///< a = sqrt(2 ln n), b = a - (ln ln n + ln 4 pi) / (2a)
    quantile,   ///< b = Phi^{-1}(1 - 1/n), a = b + 1/b
};

/// Normalizing constants for the maximum of n iid standard normals.
struct NormSeq {
    double a_n = 1.0;
    double b_n = 0.0;
    long n = 0;
    NormSeqKind kind = NormSeqKind::quantile;
};

/// Throws DegenerateNormalization for n <= 2.
NormSeq norm_seq(long n, NormSeqKind kind);

AnalyticDistribution normal_law(double mean, double sd);
AnalyticDistribution gumbel_law();

/// Lambda_n(x) = Lambda(a_n (x - b_n)).
AnalyticDistribution scaled_gumbel(const NormSeq& seq);

/// Law of (max(zeta_1..zeta_n) - zeta_0) / sqrt 2, the H -> 0 limit of the
/// grid maximum: x -> E Phi^n(sqrt 2 x - Z).
AnalyticDistribution limit_law_h0(long n);

/// N(sqrt(ln n), 1/2). Throws DomainError for n < 2.
AnalyticDistribution normal_approx(long n);

/// D_n(x) = (Lambda_n * Phi)(sqrt 2 x) with quantile-kind sequences: the law
/// of (b_n + G / a_n + Z) / sqrt 2 for standard Gumbel G and normal Z.
AnalyticDistribution dn_law(long n);

/// Closed-form mean (b_n + gamma / a_n) / sqrt 2 of dn_law(n).
double dn_mean(long n);

/// Exact law of a_n (max zeta^n - b_n): x -> Phi(b_n + x / a_n)^n.
AnalyticDistribution normalized_normal_max(const NormSeq& seq);

/// Mean by quadrature of x pdf(x) over the support hint.
double distribution_mean(const AnalyticDistribution& d, double abs_tol = 1e-9);

/// Tolerance used for every convolution integral.
inline constexpr double kConvolutionTolerance = 1e-8;

}  // namespace fbmx
