#include "fbmx/quadrature.hpp"

#include <cmath>

namespace fbmx {

namespace {

constexpr int kMaxDepth = 48;

double simpson_step(const std::function<double(double)>& f, double a, double fa, double m, double fm,
                    double b, double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= kMaxDepth || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1) +
           simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol, int panels) {
    if (!(b > a)) return 0.0;
    if (panels < 1) panels = 1;
    const double width = (b - a) / panels;
    const double tol = abs_tol / panels;
    double total = 0.0;
    double left = a;
    double f_left = f(left);
    for (int k = 0; k < panels; ++k) {
        const double right = k + 1 == panels ? b : a + (k + 1) * width;
        const double mid = 0.5 * (left + right);
        const double f_mid = f(mid);
        const double f_right = f(right);
        const double whole = (right - left) / 6.0 * (f_left + 4.0 * f_mid + f_right);
        total += simpson_step(f, left, f_left, mid, f_mid, right, f_right, whole, tol, 0);
        left = right;
        f_left = f_right;
    }
    return total;
}

}  // namespace fbmx
