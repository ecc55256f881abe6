#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rfk {

// Fixed-order accumulator for complex-valued Monte Carlo weights.
// Plain sums (not Welford) so that chunked partials combine associatively
// in index order and results are independent of the worker count.
struct MomentAccum {
    double sum_re = 0, sum_im = 0;
    double sumsq_re = 0, sumsq_im = 0;
    uint64_t n = 0;        // contributing terms (including explicit zeros)
    uint64_t horizon = 0;  // paths truncated at the time horizon
    double sum_tau = 0;
    double sum_tau2 = 0;

    void add(std::complex<double> w, double tau) {
        sum_re += w.real();
        sum_im += w.imag();
        sumsq_re += w.real() * w.real();
        sumsq_im += w.imag() * w.imag();
        sum_tau += tau;
        sum_tau2 += tau * tau;
        ++n;
    }
    void add_horizon() {
        ++horizon;
        ++n;
    }
    void combine(const MomentAccum& o) {
        sum_re += o.sum_re;
        sum_im += o.sum_im;
        sumsq_re += o.sumsq_re;
        sumsq_im += o.sumsq_im;
        sum_tau += o.sum_tau;
        sum_tau2 += o.sum_tau2;
        n += o.n;
        horizon += o.horizon;
    }

    std::complex<double> mean() const {
        if (n == 0) throw std::invalid_argument("empty accumulator");
        return {sum_re / double(n), sum_im / double(n)};
    }
    double se_re() const { return se_component(sum_re, sumsq_re); }
    double se_im() const { return se_component(sum_im, sumsq_im); }
    double mean_tau() const { return n ? sum_tau / double(n) : 0.0; }
    double se_tau() const { return se_component(sum_tau, sum_tau2); }

  private:
    double se_component(double s, double ss) const {
        if (n < 2) return 0.0;
        double nn = double(n);
        double var = (ss - s * s / nn) / (nn - 1.0);
        return std::sqrt(std::max(0.0, var) / nn);
    }
};

// One-sample Kolmogorov-Smirnov distance between the samples' empirical CDF
// and a reference CDF. Samples are copied and sorted.
inline double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_distance: no samples");
    std::sort(samples.begin(), samples.end());
    double n = double(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double F = cdf(samples[i]);
        d = std::max(d, std::max(F - double(i) / n, double(i + 1) / n - F));
    }
    return d;
}

struct LinearFit {
    double slope = 0, intercept = 0, r_squared = 0;
};

inline LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("linear_fit: need >=2 points");
    double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
    }
    double vx = sxx - sx * sx / n;
    double vy = syy - sy * sy / n;
    double cxy = sxy - sx * sy / n;
    if (vx <= 0) throw std::invalid_argument("linear_fit: degenerate x");
    LinearFit f;
    f.slope = cxy / vx;
    f.intercept = (sy - f.slope * sx) / n;
    f.r_squared = (vy > 0) ? (cxy * cxy) / (vx * vy) : 1.0;
    return f;
}

// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace rfk
