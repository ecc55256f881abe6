#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rfk {

// Bessel J_m(x) for integer m >= 0 by Miller's backward recurrence with
// even-order normalization J_0 + 2*sum J_{2k} = 1. Stable for all x >= 0 and
// the order range used here (m <= ~80, x <= ~400).
inline double bessel_j(int m, double x) {
    if (m < 0) throw std::invalid_argument("bessel_j: negative order");
    if (x < 0) throw std::invalid_argument("bessel_j: negative argument");
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    double top = std::max(double(m), x);
    int start = int(top) + 16 + int(std::sqrt(40.0 * (top + 1.0)));
    start += start & 1;  // even start
    double jp = 0.0, jc = 1e-30;
    double norm = 0.0, result = 0.0;
    for (int k = start; k >= 0; --k) {
        double jm = (2.0 * (k + 1) / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (std::fabs(jc) > 1e250) {  // renormalize to avoid overflow
            jc *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
        if (k == m) result = jc;
        if (k > 0 && (k & 1) == 0) norm += jc;
    }
    norm = 2.0 * norm + jc;
    return result / norm;
}

// l-th positive zero of J_m (l >= 1), by scan-and-bisect.
inline double bessel_j_zero(int m, int l) {
    if (l < 1) throw std::invalid_argument("bessel_j_zero: l >= 1 required");
    double x = std::max(0.5, double(m));  // first zero exceeds the order
    double step = 0.5;
    double fprev = bessel_j(m, x);
    int found = 0;
    for (int iter = 0; iter < 100000; ++iter) {
        double xn = x + step;
        double fn = bessel_j(m, xn);
        if ((fprev < 0) != (fn < 0) || fn == 0.0) {
            ++found;
            if (found == l) {
                double lo = x, hi = xn, flo = fprev;
                for (int b = 0; b < 200 && (hi - lo) > 1e-14 * hi; ++b) {
                    double mid = 0.5 * (lo + hi);
                    double fm = bessel_j(m, mid);
                    if ((flo < 0) == (fm < 0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                return 0.5 * (lo + hi);
            }
        }
        x = xn;
        fprev = fn;
    }
    throw std::runtime_error("bessel_j_zero: zero not found");
}

// Modified Bessel I_m(x) by power series with term-ratio stopping.
inline double bessel_i(int m, double x) {
    if (m < 0) throw std::invalid_argument("bessel_i: negative order");
    if (x < 0) throw std::invalid_argument("bessel_i: negative argument");
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    double term = std::exp(m * std::log(0.5 * x) - std::lgamma(double(m) + 1.0));
    double sum = term;
    double q = 0.25 * x * x;
    for (int k = 0; k < 10000; ++k) {
        term *= q / ((k + 1.0) * (m + k + 1.0));
        sum += term;
        if (term < 1e-16 * sum) return sum;
    }
    throw std::runtime_error("bessel_i: series did not converge");
}

// C^2 quintic smoothstep: 0 for u<=0, 1 for u>=1.
inline double smoothstep(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

// acosh(1+u) for u >= 0 without cancellation near u = 0.
inline double acosh1p(double u) {
    if (u < 0) throw std::invalid_argument("acosh1p: negative argument");
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

}  // namespace rfk
