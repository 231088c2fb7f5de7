#pragma once

namespace fbmx {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
inline constexpr double kEulerGamma = 0.57721566490153286061;

double std_normal_pdf(double x);

/// Standard normal distribution function Phi(x). Saturates to exactly 0 / 1
/// for |x| > 40.
double std_normal_cdf(double x);

/// Upper tail 1 - Phi(x), computed without cancellation.
double std_normal_sf(double x);

/// Phi(x)^n evaluated in log space so that large n stays accurate near x >> 0.
double std_normal_cdf_pow(double x, double n);

/// Inverse of Phi. Throws DomainError unless 0 < p < 1.
double std_normal_quantile(double p);

/// Wichura's AS241 rational approximation (about 1e-16 relative accuracy)
/// without refinement. Used on the sampling hot path; p must be in (0,1).
double std_normal_quantile_as241(double p);

/// Upper bound e^{-x^2/2} / (sqrt(2 pi) x) on the normal tail 1 - Phi(x).
double mills_bound(double x);

}  // namespace fbmx
