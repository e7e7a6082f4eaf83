#pragma once

// Bidirectional transforms between N-dimensional Cartesian and
// hyperspherical / hypercylindrical coordinates, plus coordinate base
// vectors, scale factors and the metric determinant square root.
//
// Hyperspherical (N >= 2): radius r >= 0, latitudes theta_1..theta_{N-2}
// in [0, pi], longitude phi in [0, 2pi). Hypercylindrical (N >= 3): r is
// the distance to the axis, N-3 latitudes, longitude phi, axial z.
// Angle recovery uses the two-argument arctangent throughout, so quadrant
// resolution is unambiguous; the zero vector maps to all angles 0.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperharm::coords {

inline constexpr double pi = std::numbers::pi;

struct CartesianPoint {
    std::vector<double> x;

    int dim() const { return static_cast<int>(x.size()); }
};

struct HypersphericalPoint {
    int dim = 0;                 // N >= 2
    double r = 0.0;              // >= 0
    std::vector<double> thetas;  // N-2 entries, each in [0, pi]
    double phi = 0.0;            // in [0, 2pi)
};

struct HypercylindricalPoint {
    int dim = 0;                 // N >= 3
    double r = 0.0;              // distance to the axis, >= 0
    std::vector<double> thetas;  // N-3 entries, each in [0, pi]
    double phi = 0.0;            // in [0, 2pi)
    double z = 0.0;
};

/// Coordinate base vectors (Cartesian components), one per coordinate, in
/// the order (r, theta_1, ..., phi[, z]).
struct Frame {
    std::vector<std::vector<double>> vectors;
};

/// Scale factors h_i = |e_i| in the same coordinate order; h[0] = 1 always.
struct ScaleFactors {
    std::vector<double> h;
};

namespace detail {

inline void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

inline void validate(const HypersphericalPoint& p) {
    require(p.dim >= 2, "hyperspherical point: dimension N >= 2 required");
    require(static_cast<int>(p.thetas.size()) == p.dim - 2,
            "hyperspherical point: expected N-2 latitudes");
    require(p.r >= 0.0, "hyperspherical point: r >= 0 required");
}

inline void validate(const HypercylindricalPoint& p) {
    require(p.dim >= 3, "hypercylindrical point: dimension N >= 3 required");
    require(static_cast<int>(p.thetas.size()) == p.dim - 3,
            "hypercylindrical point: expected N-3 latitudes");
    require(p.r >= 0.0, "hypercylindrical point: r >= 0 required");
}

inline double wrap_longitude(double phi) {
    return phi < 0.0 ? phi + 2.0 * pi : phi;
}

// x_1 = r cos(t_1), x_j = r sin(t_1)..sin(t_{j-1}) cos(t_j), ending with the
// cos(phi)/sin(phi) pair; writes nlat+2 entries starting at out[0].
inline void polar_block(double r, const std::vector<double>& thetas,
                        double phi, std::vector<double>& out) {
    const int nlat = static_cast<int>(thetas.size());
    double prod = r;
    for (int i = 0; i < nlat; ++i) {
        out[i] = prod * std::cos(thetas[i]);
        prod *= std::sin(thetas[i]);
    }
    out[nlat] = prod * std::cos(phi);
    out[nlat + 1] = prod * std::sin(phi);
}

}  // namespace detail

inline CartesianPoint to_cartesian(const HypersphericalPoint& p) {
    detail::validate(p);
    std::vector<double> x(p.dim);
    detail::polar_block(p.r, p.thetas, p.phi, x);
    return {std::move(x)};
}

inline CartesianPoint to_cartesian(const HypercylindricalPoint& p) {
    detail::validate(p);
    std::vector<double> x(p.dim);
    detail::polar_block(p.r, p.thetas, p.phi, x);
    x[p.dim - 1] = p.z;
    return {std::move(x)};
}

/// Inverse transform; the zero vector maps to r = 0 with all angles 0.
inline HypersphericalPoint to_hyperspherical(const CartesianPoint& c) {
    const int n = c.dim();
    detail::require(n >= 2, "to_hyperspherical: dimension N >= 2 required");
    HypersphericalPoint p;
    p.dim = n;
    p.thetas.resize(n - 2);
    // tail[i] = x_{i+1}^2 + ... + x_N^2 (0-based)
    std::vector<double> tail(n + 1, 0.0);
    for (int i = n - 1; i >= 0; --i) tail[i] = tail[i + 1] + c.x[i] * c.x[i];
    p.r = std::sqrt(tail[0]);
    for (int i = 0; i < n - 2; ++i)
        p.thetas[i] = std::atan2(std::sqrt(tail[i + 1]), c.x[i]);
    p.phi = detail::wrap_longitude(std::atan2(c.x[n - 1], c.x[n - 2]));
    return p;
}

/// Inverse transform; r excludes x_N, z = x_N. A zero transverse part maps
/// to r = 0 with all angles 0.
inline HypercylindricalPoint to_hypercylindrical(const CartesianPoint& c) {
    const int n = c.dim();
    detail::require(n >= 3, "to_hypercylindrical: dimension N >= 3 required");
    HypercylindricalPoint p;
    p.dim = n;
    p.thetas.resize(n - 3);
    std::vector<double> tail(n, 0.0);  // over x_1..x_{N-1} only
    for (int i = n - 2; i >= 0; --i) tail[i] = tail[i + 1] + c.x[i] * c.x[i];
    p.r = std::sqrt(tail[0]);
    for (int i = 0; i < n - 3; ++i)
        p.thetas[i] = std::atan2(std::sqrt(tail[i + 1]), c.x[i]);
    p.phi = detail::wrap_longitude(std::atan2(c.x[n - 2], c.x[n - 3]));
    p.z = c.x[n - 1];
    return p;
}

namespace detail {

// Base vectors of the polar block (r, theta_1.., phi) as rows; ncart is the
// number of Cartesian components to fill (trailing components stay 0 for the
// hypercylindrical embedding).
inline std::vector<std::vector<double>> polar_frame(
    double r, const std::vector<double>& thetas, double phi, int ncart) {
    const int nlat = static_cast<int>(thetas.size());
    std::vector<double> s(nlat), c(nlat);
    for (int i = 0; i < nlat; ++i) {
        s[i] = std::sin(thetas[i]);
        c[i] = std::cos(thetas[i]);
    }
    const double cphi = std::cos(phi);
    const double sphi = std::sin(phi);

    std::vector<std::vector<double>> rows(nlat + 2,
                                          std::vector<double>(ncart, 0.0));
    // e_r: the unit direction.
    {
        double prod = 1.0;
        for (int j = 0; j < nlat; ++j) {
            rows[0][j] = prod * c[j];
            prod *= s[j];
        }
        rows[0][nlat] = prod * cphi;
        rows[0][nlat + 1] = prod * sphi;
    }
    // e_{theta_m}: zero before m, -sin at m, then the m-th sine replaced by
    // the cosine in every later component.
    for (int m = 0; m < nlat; ++m) {
        auto& row = rows[m + 1];
        double prod = r;  // product of sines up to the current component
        for (int j = 0; j < m; ++j) prod *= s[j];
        row[m] = -prod * s[m];
        double skip = prod * c[m];  // sines with index != m, times cos(t_m)
        for (int j = m + 1; j < nlat; ++j) {
            row[j] = skip * c[j];
            skip *= s[j];
        }
        row[nlat] = skip * cphi;
        row[nlat + 1] = skip * sphi;
    }
    // e_phi.
    {
        auto& row = rows[nlat + 1];
        double prod = r;
        for (int j = 0; j < nlat; ++j) prod *= s[j];
        row[nlat] = -prod * sphi;
        row[nlat + 1] = prod * cphi;
    }
    return rows;
}

}  // namespace detail

/// Base vectors e_r, e_{theta_1}, ..., e_phi. Pairwise orthogonal; at
/// degenerate points (r = 0 or some sin(theta_i) = 0) some vectors vanish.
inline Frame base_vectors(const HypersphericalPoint& p) {
    detail::validate(p);
    return {detail::polar_frame(p.r, p.thetas, p.phi, p.dim)};
}

/// Base vectors e_r, e_{theta_1}, ..., e_phi, e_z.
inline Frame base_vectors(const HypercylindricalPoint& p) {
    detail::validate(p);
    auto rows = detail::polar_frame(p.r, p.thetas, p.phi, p.dim);
    rows.emplace_back(p.dim, 0.0);
    rows.back()[p.dim - 1] = 1.0;
    return {std::move(rows)};
}

/// {1, r, r sin(t_1), ..., r sin(t_1)..sin(t_{N-2})}.
inline ScaleFactors scale_factors(const HypersphericalPoint& p) {
    detail::validate(p);
    std::vector<double> h(p.dim);
    h[0] = 1.0;
    double prod = p.r;
    for (int i = 1; i < p.dim; ++i) {
        h[i] = prod;
        if (i - 1 < p.dim - 2) prod *= std::sin(p.thetas[i - 1]);
    }
    return {std::move(h)};
}

/// {1, r, r sin(t_1), ..., r sin(t_1)..sin(t_{N-3}), 1}; the axial entry is
/// unity.
inline ScaleFactors scale_factors(const HypercylindricalPoint& p) {
    detail::validate(p);
    std::vector<double> h(p.dim);
    h[0] = 1.0;
    double prod = p.r;
    for (int i = 1; i < p.dim - 1; ++i) {
        h[i] = prod;
        if (i - 1 < p.dim - 3) prod *= std::sin(p.thetas[i - 1]);
    }
    h[p.dim - 1] = 1.0;
    return {std::move(h)};
}

namespace detail {

inline double product(const ScaleFactors& sf) {
    double g = 1.0;
    for (double h : sf.h) g *= h;
    return g;
}

}  // namespace detail

/// sqrt(det g) = product of all scale factors (the volume-element weight).
inline double metric_det_sqrt(const HypersphericalPoint& p) {
    return detail::product(scale_factors(p));
}

inline double metric_det_sqrt(const HypercylindricalPoint& p) {
    return detail::product(scale_factors(p));
}

}  // namespace hyperharm::coords
