#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "rfk/special.hpp"

namespace rfk {

using ChartVec = std::array<double, 3>;

inline ChartVec chart_vec(double x, double y = 0.0, double z = 0.0) { return {x, y, z}; }

enum class ModelKind { euclidean, hyperbolic_disk2, hyperbolic_halfplane2, hyperbolic3 };

// A model geometry. All supported charts are conformally flat,
// g = F(x)^2 * I with F = exp(f); the per-model data below is (F, grad f).
struct ManifoldModel {
    ModelKind kind = ModelKind::euclidean;
    int n = 2;               // chart dimension
    double pinch_a2 = 0.0;   // -b^2 <= K <= -a^2
    double pinch_b2 = 0.0;
    double lambda1 = 0.0;    // top of the L^2 spectrum of the Laplacian

    static ManifoldModel euclidean(int dim) {
        if (dim < 1 || dim > 3) throw std::invalid_argument("euclidean: dim in {1,2,3}");
        return {ModelKind::euclidean, dim, 0.0, 0.0, 0.0};
    }
    static ManifoldModel hyperbolic_disk2() {
        return {ModelKind::hyperbolic_disk2, 2, 1.0, 1.0, -0.25};
    }
    static ManifoldModel hyperbolic_halfplane2() {
        return {ModelKind::hyperbolic_halfplane2, 2, 1.0, 1.0, -0.25};
    }
    static ManifoldModel hyperbolic3() {
        return {ModelKind::hyperbolic3, 3, 1.0, 1.0, -1.0};
    }

    std::string name() const {
        switch (kind) {
            case ModelKind::euclidean: return "euclidean" + std::to_string(n);
            case ModelKind::hyperbolic_disk2: return "hyperbolic_disk2";
            case ModelKind::hyperbolic_halfplane2: return "hyperbolic_halfplane2";
            case ModelKind::hyperbolic3: return "hyperbolic3";
        }
        return "?";
    }
};

inline ManifoldModel model_by_name(const std::string& s) {
    if (s == "euclidean1") return ManifoldModel::euclidean(1);
    if (s == "euclidean2") return ManifoldModel::euclidean(2);
    if (s == "euclidean3") return ManifoldModel::euclidean(3);
    if (s == "hyperbolic_disk2") return ManifoldModel::hyperbolic_disk2();
    if (s == "hyperbolic_halfplane2") return ManifoldModel::hyperbolic_halfplane2();
    if (s == "hyperbolic3") return ManifoldModel::hyperbolic3();
    throw std::invalid_argument("unknown model: " + s);
}

inline double sq_norm(const ManifoldModel& m, const ChartVec& x) {
    double s = 0;
    for (int i = 0; i < m.n; ++i) s += x[i] * x[i];
    return s;
}

inline bool chart_valid(const ManifoldModel& m, const ChartVec& x) {
    switch (m.kind) {
        case ModelKind::euclidean: return true;
        case ModelKind::hyperbolic_disk2:
        case ModelKind::hyperbolic3: return sq_norm(m, x) < 1.0;
        case ModelKind::hyperbolic_halfplane2: return x[1] > 0.0;
    }
    return false;
}

inline void require_chart_valid(const ManifoldModel& m, const ChartVec& x) {
    if (!chart_valid(m, x)) throw std::domain_error("point outside chart region of " + m.name());
}

// Conformal factor F with g = F^2 I.
inline double conformal_factor(const ManifoldModel& m, const ChartVec& x) {
    switch (m.kind) {
        case ModelKind::euclidean: return 1.0;
        case ModelKind::hyperbolic_disk2:
        case ModelKind::hyperbolic3: return 2.0 / (1.0 - sq_norm(m, x));
        case ModelKind::hyperbolic_halfplane2: return 1.0 / x[1];
    }
    return 1.0;
}

// grad of f = log F in chart coordinates.
inline ChartVec grad_log_factor(const ManifoldModel& m, const ChartVec& x) {
    ChartVec g{0, 0, 0};
    switch (m.kind) {
        case ModelKind::euclidean: break;
        case ModelKind::hyperbolic_disk2:
        case ModelKind::hyperbolic3: {
            double c = 2.0 / (1.0 - sq_norm(m, x));
            for (int i = 0; i < m.n; ++i) g[i] = c * x[i];
            break;
        }
        case ModelKind::hyperbolic_halfplane2: g[1] = -1.0 / x[1]; break;
    }
    return g;
}

// Full metric data at a chart point.
struct ChartGeometry {
    int n;
    double g[3][3];
    double ginv[3][3];
    double sqrt_det;
    double gamma[3][3][3];  // gamma[k][i][j] = Gamma^k_ij
};

inline ChartGeometry metric_at(const ManifoldModel& m, const ChartVec& x) {
    require_chart_valid(m, x);
    ChartGeometry cg{};
    cg.n = m.n;
    double F = conformal_factor(m, x);
    ChartVec df = grad_log_factor(m, x);
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            cg.g[i][j] = (i == j) ? F * F : 0.0;
            cg.ginv[i][j] = (i == j) ? 1.0 / (F * F) : 0.0;
        }
    }
    cg.sqrt_det = std::pow(F, m.n);
    // Conformal metric g = e^{2f} I: Gamma^k_ij = d_i f delta_jk + d_j f delta_ik - d_k f delta_ij
    for (int k = 0; k < m.n; ++k)
        for (int i = 0; i < m.n; ++i)
            for (int j = 0; j < m.n; ++j)
                cg.gamma[k][i][j] = (i == k ? df[j] : 0.0) + (j == k ? df[i] : 0.0) -
                                    (i == j ? df[k] : 0.0);
    return cg;
}

// Ito drift of the process with generator equal to the full Laplacian:
// b^k = -g^{ij} Gamma^k_ij = (n-2) F^{-2} d_k f.  Vanishes for every 2D chart.
inline ChartVec laplacian_drift(const ManifoldModel& m, const ChartVec& x) {
    ChartVec b{0, 0, 0};
    if (m.n == 2 || m.kind == ModelKind::euclidean) return b;
    double F = conformal_factor(m, x);
    ChartVec df = grad_log_factor(m, x);
    double c = double(m.n - 2) / (F * F);
    for (int i = 0; i < m.n; ++i) b[i] = c * df[i];
    return b;
}

inline double geodesic_distance(const ManifoldModel& m, const ChartVec& x, const ChartVec& y) {
    require_chart_valid(m, x);
    require_chart_valid(m, y);
    double d2 = 0;
    for (int i = 0; i < m.n; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
    switch (m.kind) {
        case ModelKind::euclidean: return std::sqrt(d2);
        case ModelKind::hyperbolic_disk2:
        case ModelKind::hyperbolic3: {
            double u = 2.0 * d2 / ((1.0 - sq_norm(m, x)) * (1.0 - sq_norm(m, y)));
            return acosh1p(u);
        }
        case ModelKind::hyperbolic_halfplane2: {
            double u = d2 / (2.0 * x[1] * y[1]);
            return acosh1p(u);
        }
    }
    return 0.0;
}

// Geodesic ball volume, closed form per model.
inline double volume_ball(const ManifoldModel& m, double r) {
    if (r < 0) throw std::domain_error("volume_ball: negative radius");
    constexpr double pi = 3.14159265358979323846;
    switch (m.kind) {
        case ModelKind::euclidean:
            if (m.n == 1) return 2.0 * r;
            if (m.n == 2) return pi * r * r;
            return 4.0 / 3.0 * pi * r * r * r;
        case ModelKind::hyperbolic_disk2:
        case ModelKind::hyperbolic_halfplane2: return 2.0 * pi * (std::cosh(r) - 1.0);
        case ModelKind::hyperbolic3: return pi * (std::sinh(2.0 * r) - 2.0 * r);
    }
    return 0.0;
}

// Area of the geodesic sphere of radius r (the radial volume density).
inline double boundary_area(const ManifoldModel& m, double r) {
    if (r < 0) throw std::domain_error("boundary_area: negative radius");
    constexpr double pi = 3.14159265358979323846;
    switch (m.kind) {
        case ModelKind::euclidean:
            if (m.n == 1) return 2.0;
            if (m.n == 2) return 2.0 * pi * r;
            return 4.0 * pi * r * r;
        case ModelKind::hyperbolic_disk2:
        case ModelKind::hyperbolic_halfplane2: return 2.0 * pi * std::sinh(r);
        case ModelKind::hyperbolic3: {
            double s = std::sinh(r);
            return 4.0 * pi * s * s;
        }
    }
    return 0.0;
}

inline double mckean_bound(const ManifoldModel& m) {
    double nm1 = double(m.n - 1);
    return -nm1 * nm1 * m.pinch_a2 / 4.0;
}

namespace detail {

using cplx = std::complex<double>;

inline cplx to_cplx(const ChartVec& v) { return {v[0], v[1]}; }
inline ChartVec from_cplx(cplx z) { return {z.real(), z.imag(), 0.0}; }

// Poincare disk geodesic from z with metric-unit chart direction e (|e|=1 in
// chart coordinates; the Mobius translation to the origin has positive real
// derivative, so the chart direction carries over unrotated).
inline cplx disk_exp(cplx z, cplx e, double s) {
    cplx w0 = std::tanh(0.5 * s) * e;
    return (w0 + z) / (1.0 + std::conj(z) * w0);
}

// Cayley transform half-plane -> disk and inverse.
inline cplx cayley(cplx z) { return (z - cplx(0, 1)) / (z + cplx(0, 1)); }
inline cplx cayley_inv(cplx w) { return cplx(0, 1) * (1.0 + w) / (1.0 - w); }
inline cplx cayley_deriv(cplx z) {
    cplx d = z + cplx(0, 1);
    return cplx(0, 2) / (d * d);
}

// Mobius translation of the disk taking a to 0, and its inverse action.
inline cplx mobius_to_origin(cplx a, cplx z) { return (z - a) / (1.0 - std::conj(a) * z); }
inline cplx mobius_from_origin(cplx a, cplx w) { return (w + a) / (1.0 + std::conj(a) * w); }

}  // namespace detail

// Exponential map: start at x, move geodesic distance s along the chart
// direction dir (normalized internally to a metric-unit tangent vector).
inline ChartVec geo_exp(const ManifoldModel& m, const ChartVec& x, const ChartVec& dir, double s) {
    require_chart_valid(m, x);
    double norm2 = 0;
    for (int i = 0; i < m.n; ++i) norm2 += dir[i] * dir[i];
    if (norm2 <= 0) throw std::invalid_argument("geo_exp: zero direction");
    double inv = 1.0 / std::sqrt(norm2);
    switch (m.kind) {
        case ModelKind::euclidean: {
            ChartVec y = x;
            for (int i = 0; i < m.n; ++i) y[i] += s * dir[i] * inv;
            return y;
        }
        case ModelKind::hyperbolic_disk2: {
            auto z = detail::to_cplx(x);
            auto e = detail::to_cplx(dir) * inv;
            return detail::from_cplx(detail::disk_exp(z, e, s));
        }
        case ModelKind::hyperbolic_halfplane2: {
            auto z = detail::to_cplx(x);
            auto e = detail::to_cplx(dir) * inv;
            auto w = detail::cayley(z);
            auto ed = detail::cayley_deriv(z) * e;
            ed /= std::abs(ed);
            return detail::from_cplx(detail::cayley_inv(detail::disk_exp(w, ed, s)));
        }
        case ModelKind::hyperbolic3:
            throw std::invalid_argument("geo_exp: hyperbolic3 chart is kernel-only");
    }
    return x;
}

}  // namespace rfk
