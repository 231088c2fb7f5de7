#pragma once

#include <functional>

namespace fbmx {

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance
/// `abs_tol`. The interval is first split into `panels` equal pieces so that
/// narrow peaks are not skipped by the initial five-point estimate.
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-8,
                 int panels = 16);

}  // namespace fbmx
