#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace rfk {

namespace detail {

template <class F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson on [a,b] with absolute tolerance.
template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-12, int max_depth = 48) {
    if (!(b >= a)) throw std::invalid_argument("integrate: bad interval");
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Semi-infinite integral by segment doubling: integrates [a, a+w], [a+w, a+3w], ...
// until a segment contributes less than rel_tail of the accumulated total.
template <class F>
double integrate_to_infinity(const F& f, double a, double w0 = 1.0, double tol = 1e-12,
                             double rel_tail = 1e-13, int max_segments = 64) {
    double total = 0.0;
    double lo = a, w = w0;
    for (int k = 0; k < max_segments; ++k) {
        double hi = lo + w;
        double seg = integrate(f, lo, hi, tol);
        total += seg;
        if (k > 1 && std::fabs(seg) <= rel_tail * (std::fabs(total) + 1e-300)) return total;
        lo = hi;
        w *= 2.0;
    }
    throw std::runtime_error("integrate_to_infinity: no convergence");
}

}  // namespace rfk
