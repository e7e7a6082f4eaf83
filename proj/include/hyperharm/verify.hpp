#pragma once

// Independent numerical oracles used by the acceptance tests: fourth-order
// finite-difference derivatives, an ODE residual harness, the N-dimensional
// finite-difference Laplacian in hyperspherical / hypercylindrical
// coordinates, and compensated-summation re-implementations of the 2F1 and
// Bessel series. The re-implementations deliberately share no helper with
// specfun (the gamma factor comes from libm, the summation is Kahan, the
// truncation threshold is 1e-17).

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "coords.hpp"
#include "legendre.hpp"

namespace hyperharm::verify {

inline constexpr double default_step = 1e-3;

/// 4th-order central differences (5-point stencil), first or second
/// derivative; f must be evaluable on [x-2h, x+2h].
template <class F>
auto fd_derivative(F&& f, double x, int order, double h) {
    if (order == 1)
        return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) -
                f(x + 2.0 * h)) /
               (12.0 * h);
    if (order == 2)
        return (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) +
                16.0 * f(x + h) - f(x + 2.0 * h)) /
               (12.0 * h * h);
    throw std::invalid_argument("fd_derivative: order must be 1 or 2");
}

/// Residual sweep summary. Residuals are normalized by the grid maximum of
/// |f| (the functions grow toward the interval ends, so absolute residuals
/// mean nothing there); pass <=> max_residual/scale < tolerance.
struct ResidualReport {
    std::vector<double> grid;
    double step = default_step;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    double scale = 0.0;  // max |f| on the grid
    double tolerance = 0.0;
    bool pass = false;
};

/// Evaluates G'' + (1+2 lambda) cot(theta) G' + [nu(nu+1) - mu^2
/// csc^2(theta)] G by central differences at each grid point. The grid must
/// stay inside (2h, pi-2h).
template <class F>
ResidualReport ode_residual(const legendre::OdeCoefficients& ode, F&& f,
                            const std::vector<double>& grid, double h,
                            double tolerance) {
    ResidualReport rep;
    rep.grid = grid;
    rep.step = h;
    rep.tolerance = tolerance;
    double sum = 0.0;
    for (double theta : grid) {
        if (!(theta > 2.0 * h && theta < coords::pi - 2.0 * h))
            throw std::invalid_argument(
                "ode_residual: grid point outside (2h, pi-2h)");
        const double g = f(theta);
        const double dg = fd_derivative(f, theta, 1, h);
        const double d2g = fd_derivative(f, theta, 2, h);
        const double res = std::abs(ode.residual(g, dg, d2g, theta));
        rep.max_residual = std::max(rep.max_residual, res);
        sum += res;
        rep.scale = std::max(rep.scale, std::abs(g));
    }
    rep.mean_residual = grid.empty() ? 0.0 : sum / grid.size();
    rep.pass = rep.scale > 0.0 && rep.max_residual / rep.scale < tolerance;
    return rep;
}

namespace detail {

inline void check_margin(bool ok) {
    if (!ok)
        throw std::domain_error(
            "laplacian_fd: point too close to a coordinate degeneracy "
            "(margin 2h required)");
}

}  // namespace detail

/// Finite-difference Laplacian in hyperspherical coordinates: the radial
/// term f_rr + (N-1)/r f_r, one conservative-form latitude term
/// f'' + (N-n-1) cot(theta_n) f' per latitude divided by r^2 and the squared
/// sines of the earlier latitudes, and the longitude term. f may return
/// double or std::complex<double>.
template <class F>
auto laplacian_fd(int dim, F&& f, const coords::HypersphericalPoint& p,
                  double h = default_step) {
    if (dim != p.dim)
        throw std::invalid_argument("laplacian_fd: dimension mismatch");
    detail::check_margin(p.r > 2.0 * h);
    for (double th : p.thetas)
        detail::check_margin(th > 2.0 * h && th < coords::pi - 2.0 * h);

    auto fr = [&](double r) {
        auto q = p;
        q.r = r;
        return f(q);
    };
    auto acc = fd_derivative(fr, p.r, 2, h) +
               ((dim - 1.0) / p.r) * fd_derivative(fr, p.r, 1, h);
    double denom = p.r * p.r;
    for (int i = 0; i < dim - 2; ++i) {
        auto ft = [&](double th) {
            auto q = p;
            q.thetas[i] = th;
            return f(q);
        };
        const double w_exp = dim - i - 2.0;  // sine power N-n-1, n = i+1
        const double cot = 1.0 / std::tan(p.thetas[i]);
        acc += (fd_derivative(ft, p.thetas[i], 2, h) +
                w_exp * cot * fd_derivative(ft, p.thetas[i], 1, h)) /
               denom;
        const double s = std::sin(p.thetas[i]);
        denom *= s * s;
    }
    auto fp = [&](double phi) {
        auto q = p;
        q.phi = phi;
        return f(q);
    };
    acc += fd_derivative(fp, p.phi, 2, h) / denom;
    return acc;
}

/// Finite-difference Laplacian in hypercylindrical coordinates: radial term
/// f_rr + (N-2)/r f_r, latitude sine powers N-n-2, the longitude term and a
/// plain axial f_zz.
template <class F>
auto laplacian_fd(int dim, F&& f, const coords::HypercylindricalPoint& p,
                  double h = default_step) {
    if (dim != p.dim)
        throw std::invalid_argument("laplacian_fd: dimension mismatch");
    detail::check_margin(p.r > 2.0 * h);
    for (double th : p.thetas)
        detail::check_margin(th > 2.0 * h && th < coords::pi - 2.0 * h);

    auto fr = [&](double r) {
        auto q = p;
        q.r = r;
        return f(q);
    };
    auto acc = fd_derivative(fr, p.r, 2, h) +
               ((dim - 2.0) / p.r) * fd_derivative(fr, p.r, 1, h);
    double denom = p.r * p.r;
    for (int i = 0; i < dim - 3; ++i) {
        auto ft = [&](double th) {
            auto q = p;
            q.thetas[i] = th;
            return f(q);
        };
        const double w_exp = dim - i - 3.0;  // sine power N-n-2, n = i+1
        const double cot = 1.0 / std::tan(p.thetas[i]);
        acc += (fd_derivative(ft, p.thetas[i], 2, h) +
                w_exp * cot * fd_derivative(ft, p.thetas[i], 1, h)) /
               denom;
        const double s = std::sin(p.thetas[i]);
        denom *= s * s;
    }
    auto fp = [&](double phi) {
        auto q = p;
        q.phi = phi;
        return f(q);
    };
    acc += fd_derivative(fp, p.phi, 2, h) / denom;
    auto fz = [&](double z) {
        auto q = p;
        q.z = z;
        return f(q);
    };
    acc += fd_derivative(fz, p.z, 2, h);
    return acc;
}

namespace detail {

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace detail

/// Compensated-summation 2F1 cross-check; direct sum only (no
/// transformation), truncation at 1e-17 relative.
inline double oracle_hyp2f1(double alpha, double beta, double gamma,
                            double z) {
    detail::KahanSum acc;
    acc.add(1.0);
    double term = 1.0;
    for (long k = 0; k < 200000; ++k) {
        const double ak = alpha + static_cast<double>(k);
        const double bk = beta + static_cast<double>(k);
        const double ck = gamma + static_cast<double>(k);
        if (ak == 0.0 || bk == 0.0) return acc.sum;
        if (ck == 0.0)
            throw std::domain_error(
                "oracle_hyp2f1: lower-parameter pole reached before "
                "termination");
        term *= ak * bk / (ck * static_cast<double>(k + 1)) * z;
        acc.add(term);
        if (std::abs(term) < 1e-17 * std::abs(acc.sum)) return acc.sum;
    }
    throw std::runtime_error("oracle_hyp2f1: series did not converge");
}

/// Compensated-summation Bessel J cross-check; the gamma factor comes from
/// libm (std::tgamma), not from specfun.
inline double oracle_bessel_j(double sigma, double x) {
    if (x < 0.0)
        throw std::domain_error("oracle_bessel_j: argument must be >= 0");
    if (x == 0.0) return sigma == 0.0 ? 1.0 : 0.0;
    const double half = 0.5 * x;
    const double q = half * half;
    double term = std::pow(half, sigma) / std::tgamma(sigma + 1.0);
    detail::KahanSum acc;
    acc.add(term);
    for (long k = 1; k < 2000; ++k) {
        term *= -q / (static_cast<double>(k) * (static_cast<double>(k) + sigma));
        acc.add(term);
        if (std::abs(term) < 1e-17 * std::abs(acc.sum)) return acc.sum;
    }
    throw std::runtime_error("oracle_bessel_j: series did not converge");
}

}  // namespace hyperharm::verify
