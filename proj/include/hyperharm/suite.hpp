#pragma once

// The verification matrix behind `verify {coords,specfun,legendre,physics,
// all}` and the acceptance test binary: coordinate round trips and frame
// laws, special-function identities, ODE residuals for the whole Legendre
// hierarchy (with the corrected-versus-uncorrected parameter controls),
// assembled-mode Helmholtz residuals, the radial law, dispersion
// consistency and the first-latitude table properties. Every check pins its
// tolerance here and fills one CheckResult.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coords.hpp"
#include "legendre.hpp"
#include "physics.hpp"
#include "specfun.hpp"
#include "verify.hpp"

namespace hyperharm::suite {

struct CheckResult {
    std::string name;
    bool pass = false;
    double observed = 0.0;   // worst metric over the check's sweep
    double tolerance = 0.0;  // bound it was compared against
    double elapsed_s = 0.0;
    std::string detail;
};

namespace detail {

class Timer {
  public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

// Deterministic uniform doubles independent of the standard library's
// distribution implementations.
class Uniform {
  public:
    explicit Uniform(std::uint64_t seed) : rng_(seed) {}

    double operator()(double lo, double hi) {
        const double u = (rng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

  private:
    std::mt19937_64 rng_;
};

inline CheckResult bounded(const std::string& name, double observed,
                           double tolerance, const Timer& t,
                           std::string detail = {}) {
    return {name, observed < tolerance, observed, tolerance, t.seconds(),
            std::move(detail)};
}

inline std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    return g;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// coords: round trips and frame laws
// ---------------------------------------------------------------------------

/// Cartesian -> hyperspherical -> Cartesian (and hypercylindrical) round
/// trips on random points, max vector-relative error.
inline CheckResult check_round_trips(int dim_lo = 2, int dim_hi = 8,
                                     int points = 1000) {
    detail::Timer t;
    detail::Uniform u(0x5eed0001);
    double worst = 0.0;
    for (int n = dim_lo; n <= dim_hi; ++n) {
        for (int it = 0; it < points; ++it) {
            coords::CartesianPoint x;
            x.x.resize(n);
            double norm2 = 0.0, trans2 = 0.0;
            do {
                norm2 = trans2 = 0.0;
                for (int i = 0; i < n; ++i) {
                    x.x[i] = u(-2.0, 2.0);
                    norm2 += x.x[i] * x.x[i];
                    if (i < n - 1) trans2 += x.x[i] * x.x[i];
                }
            } while (norm2 < 0.01 || trans2 < 0.01);

            auto back_hs = coords::to_cartesian(coords::to_hyperspherical(x));
            double err2 = 0.0;
            for (int i = 0; i < n; ++i) {
                const double d = back_hs.x[i] - x.x[i];
                err2 += d * d;
            }
            worst = std::max(worst, std::sqrt(err2 / norm2));

            if (n >= 3) {
                auto back_hc =
                    coords::to_cartesian(coords::to_hypercylindrical(x));
                err2 = 0.0;
                for (int i = 0; i < n; ++i) {
                    const double d = back_hc.x[i] - x.x[i];
                    err2 += d * d;
                }
                worst = std::max(worst, std::sqrt(err2 / norm2));
            }
        }
    }
    return detail::bounded("coords: round trips N=" + std::to_string(dim_lo) +
                               ".." + std::to_string(dim_hi),
                           worst, 1e-10, t);
}

namespace detail {

template <class Point, class ToCart>
void frame_law_errors(const Point& p, const coords::Frame& fr,
                      const coords::ScaleFactors& sf, ToCart&& to_cart,
                      double& ortho, double& normlaw, double& detlaw,
                      double& jacobian) {
    const int n = static_cast<int>(fr.vectors.size());
    std::vector<double> norms(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (double c : fr.vectors[i]) s += c * c;
        norms[i] = std::sqrt(s);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t c = 0; c < fr.vectors[i].size(); ++c)
                dot += fr.vectors[i][c] * fr.vectors[j][c];
            const double scale = norms[i] * norms[j];
            if (scale > 0.0) ortho = std::max(ortho, std::abs(dot) / scale);
        }
    for (int i = 0; i < n; ++i)
        normlaw = std::max(
            norms[i] > 0.0 || sf.h[i] > 0.0
                ? std::abs(norms[i] - sf.h[i]) / std::max(norms[i], sf.h[i])
                : 0.0,
            normlaw);
    // closed-form volume weight: r^(N-1) prod sin^(N-1-i)(theta_i) for the
    // hyperspherical system, r^(N-2) prod sin^(N-2-i)(theta_i) for the
    // hypercylindrical one
    const int radial_power =
        std::is_same_v<Point, coords::HypersphericalPoint> ? p.dim - 1
                                                           : p.dim - 2;
    double closed = std::pow(p.r, radial_power);
    for (std::size_t i = 0; i < p.thetas.size(); ++i)
        closed *= std::pow(std::sin(p.thetas[i]),
                           radial_power - 1 - static_cast<int>(i));
    const double g = coords::metric_det_sqrt(p);
    detlaw = std::max(detlaw, std::abs(g - closed) / std::max(1.0, closed));

    // each frame vector against the plain central difference of the
    // transform along its coordinate
    constexpr double h = 1e-6;
    auto column_error = [&](int idx, auto&& shift) {
        Point lo = p, hi = p;
        shift(lo, -h);
        shift(hi, +h);
        const auto clo = to_cart(lo);
        const auto chi = to_cart(hi);
        double worst = 0.0;
        for (int c = 0; c < p.dim; ++c) {
            const double fd = (chi.x[c] - clo.x[c]) / (2.0 * h);
            worst = std::max(worst, std::abs(fd - fr.vectors[idx][c]));
        }
        return worst;
    };
    int idx = 0;
    jacobian = std::max(
        jacobian, column_error(idx++, [](Point& q, double d) { q.r += d; }));
    for (std::size_t i = 0; i < p.thetas.size(); ++i)
        jacobian = std::max(jacobian, column_error(idx++, [i](Point& q, double d) {
                                q.thetas[i] += d;
                            }));
    jacobian = std::max(
        jacobian, column_error(idx++, [](Point& q, double d) { q.phi += d; }));
    if constexpr (std::is_same_v<Point, coords::HypercylindricalPoint>)
        jacobian = std::max(jacobian, column_error(idx++, [](Point& q, double d) {
                                q.z += d;
                            }));
}

}  // namespace detail

/// Orthogonality, |e_i| = h_i, sqrt(g) = prod h_i and frame-versus-Jacobian
/// agreement at random interior points of both systems.
inline std::vector<CheckResult> check_frame_laws(int dim_lo = 2,
                                                 int dim_hi = 8) {
    detail::Timer t;
    detail::Uniform u(0x5eed0002);
    double ortho = 0.0, normlaw = 0.0, detlaw = 0.0, jacobian = 0.0;
    for (int n = dim_lo; n <= dim_hi; ++n) {
        for (int it = 0; it < 40; ++it) {
            coords::HypersphericalPoint p;
            p.dim = n;
            p.r = u(0.5, 2.0);
            p.thetas.resize(n - 2);
            for (auto& th : p.thetas) th = u(0.4, coords::pi - 0.4);
            p.phi = u(0.0, 2.0 * coords::pi);
            detail::frame_law_errors(
                p, coords::base_vectors(p), coords::scale_factors(p),
                [](const coords::HypersphericalPoint& q) {
                    return coords::to_cartesian(q);
                },
                ortho, normlaw, detlaw, jacobian);

            if (n >= 3) {
                coords::HypercylindricalPoint c;
                c.dim = n;
                c.r = u(0.5, 2.0);
                c.thetas.resize(n - 3);
                for (auto& th : c.thetas) th = u(0.4, coords::pi - 0.4);
                c.phi = u(0.0, 2.0 * coords::pi);
                c.z = u(-2.0, 2.0);
                detail::frame_law_errors(
                    c, coords::base_vectors(c), coords::scale_factors(c),
                    [](const coords::HypercylindricalPoint& q) {
                        return coords::to_cartesian(q);
                    },
                    ortho, normlaw, detlaw, jacobian);
            }
        }
    }
    std::vector<CheckResult> out;
    out.push_back(detail::bounded("coords: frame orthogonality", ortho, 1e-10, t));
    out.push_back(detail::bounded("coords: |e_i| = h_i", normlaw, 1e-10, t));
    out.push_back(
        detail::bounded("coords: sqrt(g) closed form", detlaw, 1e-12, t));
    out.push_back(detail::bounded("coords: frame = FD Jacobian", jacobian,
                                  1e-6, t));
    // one shared sweep produced all four results; account its time once
    for (std::size_t i = 1; i < out.size(); ++i) out[i].elapsed_s = 0.0;
    return out;
}

inline std::vector<CheckResult> coords_suite(int dim_lo = 2, int dim_hi = 8) {
    std::vector<CheckResult> out;
    out.push_back(check_round_trips(dim_lo, dim_hi));
    auto frames = check_frame_laws(dim_lo, dim_hi);
    out.insert(out.end(), frames.begin(), frames.end());
    return out;
}

// ---------------------------------------------------------------------------
// specfun: 2F1 and Bessel identities
// ---------------------------------------------------------------------------

/// d/dz F(a,b;c;z) = (ab/c) F(a+1,b+1;c+1;z) against central differences.
inline CheckResult check_hyp2f1_derivative() {
    detail::Timer t;
    detail::Uniform u(0x5eed0003);
    double worst = 0.0;
    for (int it = 0; it < 20; ++it) {
        const double a = u(0.2, 2.5);
        const double b = u(0.2, 2.5);
        const double c = u(0.7, 3.0);
        const double z = u(0.05, 0.45);
        constexpr double h = 1e-5;
        const double fd = (specfun::hyp2f1(a, b, c, z + h) -
                           specfun::hyp2f1(a, b, c, z - h)) /
                          (2.0 * h);
        const double exact =
            a * b / c * specfun::hyp2f1(a + 1.0, b + 1.0, c + 1.0, z);
        worst = std::max(worst,
                         std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
    }
    return detail::bounded("specfun: 2F1 derivative identity", worst, 1e-6, t);
}

/// Direct sum versus Euler-transformed sum where both converge comfortably.
inline CheckResult check_hyp2f1_euler() {
    detail::Timer t;
    detail::Uniform u(0x5eed0004);
    double worst = 0.0;
    for (int it = 0; it < 40; ++it) {
        const double a = u(0.2, 2.0);
        const double b = u(0.2, 2.0);
        const double c = u(0.8, 3.0);
        const double z = u(0.1, 0.45);
        const double direct = specfun::hyp2f1_series(a, b, c, z);
        const double transformed =
            std::pow(1.0 - z, c - a - b) *
            specfun::hyp2f1_series(c - a, c - b, c, z);
        worst = std::max(worst, std::abs(direct - transformed) /
                                    std::max(1.0, std::abs(direct)));
    }
    return detail::bounded("specfun: 2F1 Euler self-consistency", worst, 1e-10,
                           t);
}

/// J_{s-1}(x) + J_{s+1}(x) = (2s/x) J_s(x).
inline CheckResult check_bessel_recurrence() {
    detail::Timer t;
    double worst = 0.0;
    const double sigmas[] = {1.3, std::sqrt(3.0), 2.5};
    const double xs[] = {0.5, 2.0, 10.0};
    for (double s : sigmas)
        for (double x : xs) {
            const double lhs =
                specfun::bessel_j(s - 1.0, x) + specfun::bessel_j(s + 1.0, x);
            const double rhs = 2.0 * s / x * specfun::bessel_j(s, x);
            const double scale =
                std::max({std::abs(lhs), std::abs(rhs), 1e-30});
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    return detail::bounded("specfun: Bessel recurrence", worst, 1e-10, t);
}

/// J_s(x) Y'_s(x) - J'_s(x) Y_s(x) = 2/(pi x), derivatives by the 4th-order
/// stencil.
inline CheckResult check_bessel_wronskian() {
    detail::Timer t;
    const double s = std::sqrt(3.0);
    const double x = 2.0;
    constexpr double h = 1e-3;
    auto J = [&](double xx) { return specfun::bessel_j(s, xx); };
    auto Y = [&](double xx) { return specfun::bessel_y(s, xx); };
    const double w = J(x) * verify::fd_derivative(Y, x, 1, h) -
                     verify::fd_derivative(J, x, 1, h) * Y(x);
    const double expected = 2.0 / (specfun::pi * x);
    return detail::bounded("specfun: Bessel Wronskian 2/(pi x)",
                           std::abs(w - expected), 1e-8, t);
}

/// Terminating 2F1 sums against direct rational Pochhammer products.
inline CheckResult check_terminating_exactness() {
    detail::Timer t;
    struct Case {
        int n;
        double b, c, z;
    };
    const Case cases[] = {{2, 3.0, 1.0, 0.5},
                          {3, 2.5, 1.5, 2.0},
                          {5, 1.2, 0.8, -1.5},
                          {4, -6.5, 2.2, 0.7}};
    double worst = 0.0;
    for (const auto& cs : cases) {
        // sum_k (-n)_k (b)_k / ((c)_k k!) z^k assembled term by term from
        // plain products
        double direct = 0.0;
        for (int k = 0; k <= cs.n; ++k) {
            double term = 1.0;
            for (int j = 0; j < k; ++j)
                term *= (-cs.n + j) * (cs.b + j) / ((cs.c + j) * (j + 1.0)) *
                        cs.z;
            direct += term;
        }
        const double val = specfun::hyp2f1(-cs.n, cs.b, cs.c, cs.z);
        worst = std::max(worst, std::abs(val - direct) /
                                    std::max(1.0, std::abs(direct)));
    }
    return detail::bounded("specfun: terminating-series exactness", worst,
                           1e-13, t);
}

inline std::vector<CheckResult> specfun_suite() {
    return {check_hyp2f1_derivative(), check_hyp2f1_euler(),
            check_bessel_recurrence(), check_bessel_wronskian(),
            check_terminating_exactness()};
}

// ---------------------------------------------------------------------------
// legendre: hierarchy ODE residuals, parameter controls, table properties
// ---------------------------------------------------------------------------

inline std::vector<double> residual_grid() {
    return detail::linspace(0.3, coords::pi - 0.3, 50);
}

/// Worst relative ODE residual over the (nu, mu, lambda, branch) matrix for
/// all four families of the hierarchy.
inline CheckResult check_hierarchy_residuals() {
    detail::Timer t;
    const auto grid = residual_grid();
    constexpr double h = 1e-3;
    const double nus[] = {1.0, 2.0, 3.0};
    const double mus[] = {0.0, std::sqrt(2.0), std::sqrt(6.0)};
    const double lambdas[] = {0.0, 0.5, 1.0};
    double worst = 0.0;

    auto run = [&](const legendre::OdeCoefficients& ode, auto&& f) {
        const auto rep = verify::ode_residual(ode, f, grid, h, 1e-6);
        worst = std::max(worst, rep.max_residual / rep.scale);
    };

    for (double nu : nus) {
        run({nu, 0.0, 0.0}, [nu](double th) {
            return legendre::legendre_p(nu, std::cos(th));
        });
        for (double mu : mus)
            run({nu, mu, 0.0}, [nu, mu](double th) {
                return legendre::assoc_legendre_p(nu, mu, std::cos(th));
            });
        for (double lam : lambdas)
            run({nu, 0.0, lam}, [nu, lam](double th) {
                return legendre::hyper_legendre(nu, lam, std::cos(th));
            });
        for (double mu : mus)
            for (double lam : lambdas)
                for (auto br : {legendre::Branch::plus, legendre::Branch::minus})
                    run({nu, mu, lam}, [=](double th) {
                        return legendre::hyper_assoc_legendre(
                            {nu, mu, lam, br}, std::cos(th));
                    });
    }
    return detail::bounded("legendre: hierarchy ODE residual matrix", worst,
                           1e-6, t);
}

/// Control pair at (nu, mu, lambda) = (1, sqrt(2), 1/2): the uncorrected
/// radicand parameters must FAIL the defining equation (residual > 0.1, the
/// resulting function is sin(theta)); the quadratic-root parameters must
/// pass at 1e-6; and direct substitution of sin(theta) leaves a residual
/// equal to sin(theta) itself.
inline std::vector<CheckResult> check_parameter_controls() {
    std::vector<CheckResult> out;
    const auto grid = residual_grid();
    constexpr double h = 1e-3;
    const legendre::HyperLegendreParams p{1.0, std::sqrt(2.0), 0.5,
                                          legendre::Branch::plus};
    const auto ode = legendre::hyper_assoc_ode_residual_form(p);

    {
        detail::Timer t;
        const auto bad = legendre::hyper_assoc_params_uncorrected(p);
        const auto rep = verify::ode_residual(
            ode,
            [&](double th) { return legendre::hyper_assoc_eval(bad, std::cos(th)); },
            grid, h, 1e-6);
        const double rel = rep.max_residual / rep.scale;
        out.push_back({"legendre: uncorrected radicand fails the equation",
                       rel > 0.1, rel, 0.1, t.seconds(),
                       "expected residual above threshold"});
    }
    {
        detail::Timer t;
        const auto good = legendre::hyper_assoc_params(p);
        const auto rep = verify::ode_residual(
            ode,
            [&](double th) {
                return legendre::hyper_assoc_eval(good, std::cos(th));
            },
            grid, h, 1e-6);
        out.push_back(detail::bounded(
            "legendre: quadratic-root parameters satisfy the equation",
            rep.max_residual / rep.scale, 1e-6, t));
    }
    {
        detail::Timer t;
        double worst = 0.0;
        for (double th : grid) {
            const double g = std::sin(th);
            const double res = ode.residual(g, std::cos(th), -g, th);
            worst = std::max(worst, std::abs(res + g));  // residual = -sin
        }
        out.push_back(detail::bounded(
            "legendre: sin(theta) control leaves residual -sin(theta)", worst,
            1e-6, t, "analytic substitution"));
    }
    return out;
}

/// First-latitude table properties over the (q, s) grid: value 1 at the
/// midpoint (exactly), symmetry about pi/2, growth toward the interval ends;
/// both branches.
inline std::vector<CheckResult> check_first_latitude_tables() {
    detail::Timer t;
    const std::pair<int, int> qs[] = {{1, 1}, {1, 2}, {2, 2},
                                      {2, 3}, {3, 1}, {3, 3}};
    double mid_err = 0.0, sym_err = 0.0;
    bool grows = true;
    const auto psis = detail::linspace(0.3, coords::pi - 0.3, 200);
    for (const auto& [q, s] : qs) {
        const double mu = std::sqrt(s * (s + 1.0));
        for (auto br : {legendre::Branch::plus, legendre::Branch::minus}) {
            const legendre::HyperLegendreParams p{static_cast<double>(q), mu,
                                                  0.5, br};
            mid_err = std::max(mid_err,
                               std::abs(legendre::hyper_assoc_legendre(p, 0.0) -
                                        1.0));
            std::vector<double> vals(psis.size());
            for (std::size_t i = 0; i < psis.size(); ++i)
                vals[i] = legendre::hyper_assoc_legendre(p, std::cos(psis[i]));
            for (std::size_t i = 0; i < psis.size() / 2; ++i)
                sym_err = std::max(
                    sym_err, std::abs(vals[i] - vals[psis.size() - 1 - i]));
            if (!(std::abs(vals.front()) > 1.0)) grows = false;
        }
    }
    std::vector<CheckResult> out;
    out.push_back(detail::bounded("legendre: table midpoint value 1", mid_err,
                                  1e-12, t));
    out.push_back(
        detail::bounded("legendre: table symmetry about pi/2", sym_err, 1e-10, t));
    out.push_back({"legendre: table growth toward the ends", grows,
                   grows ? 1.0 : 0.0, 1.0, t.seconds(),
                   "|f(0.3)| must exceed the midpoint value 1"});
    return out;
}

inline std::vector<CheckResult> legendre_suite() {
    std::vector<CheckResult> out;
    out.push_back(check_hierarchy_residuals());
    auto ctl = check_parameter_controls();
    out.insert(out.end(), ctl.begin(), ctl.end());
    auto fig = check_first_latitude_tables();
    out.insert(out.end(), fig.begin(), fig.end());
    return out;
}

// ---------------------------------------------------------------------------
// physics: Helmholtz residuals, radial law, dispersion, Cartesian sanity
// ---------------------------------------------------------------------------

namespace detail {

/// Max |FD-laplacian(F) + k2 F| over random interior points, normalized by
/// k2 * max|F|.
inline double helmholtz_residual_hs(const physics::ModeSpec& ms, int points,
                                    Uniform& u) {
    const double k2 = physics::helmholtz_k2(ms);
    auto f = [&](const coords::HypersphericalPoint& p) {
        return physics::mode_eval(ms, p, 0.0);
    };
    double worst = 0.0, scale = 0.0;
    for (int it = 0; it < points; ++it) {
        coords::HypersphericalPoint p;
        p.dim = ms.dim;
        p.r = u(0.5, 3.0);
        p.thetas.resize(ms.dim - 2);
        for (auto& th : p.thetas) th = u(0.4, coords::pi - 0.4);
        p.phi = u(0.0, 2.0 * coords::pi);
        const auto val = f(p);
        const auto lap = verify::laplacian_fd(ms.dim, f, p, 1e-3);
        worst = std::max(worst, std::abs(lap + k2 * val));
        scale = std::max(scale, std::abs(val));
    }
    return worst / (k2 * scale);
}

inline double helmholtz_residual_hc(const physics::ModeSpec& ms, int points,
                                    Uniform& u) {
    const double k2 = physics::helmholtz_k2(ms);
    auto f = [&](const coords::HypercylindricalPoint& p) {
        return physics::mode_eval(ms, p, 0.0);
    };
    double worst = 0.0, scale = 0.0;
    for (int it = 0; it < points; ++it) {
        coords::HypercylindricalPoint p;
        p.dim = ms.dim;
        p.r = u(0.5, 3.0);
        p.thetas.resize(ms.dim - 3);
        for (auto& th : p.thetas) th = u(0.4, coords::pi - 0.4);
        p.phi = u(0.0, 2.0 * coords::pi);
        p.z = u(-1.0, 1.0);
        const auto val = f(p);
        const auto lap = verify::laplacian_fd(ms.dim, f, p, 1e-3);
        worst = std::max(worst, std::abs(lap + k2 * val));
        scale = std::max(scale, std::abs(val));
    }
    return worst / (k2 * scale);
}

}  // namespace detail

/// Assembled-mode Helmholtz residuals: the 4D hyperspherical chain (1,1)
/// with m in {0,1}, one 4D hypercylindrical mode and one 5D hyperspherical
/// mode.
inline CheckResult check_helmholtz_modes() {
    detail::Timer t;
    detail::Uniform u(0x5eed0006);
    double worst = 0.0;
    for (int m : {0, 1}) {
        physics::ModeSpec ms;
        ms.system = physics::System::hyperspherical;
        ms.dim = 4;
        ms.m = m;
        ms.q_chain = {1, 1};
        ms.k = 1.0;
        worst = std::max(worst, detail::helmholtz_residual_hs(ms, 50, u));
    }
    {
        physics::ModeSpec ms;
        ms.system = physics::System::hypercylindrical;
        ms.dim = 4;
        ms.m = 1;
        ms.q_chain = {2};
        ms.k = 1.0;
        ms.K = 0.7;
        worst = std::max(worst, detail::helmholtz_residual_hc(ms, 50, u));
    }
    {
        physics::ModeSpec ms;
        ms.system = physics::System::hyperspherical;
        ms.dim = 5;
        ms.m = 1;
        ms.q_chain = {2, 1, 1};
        ms.k = 1.0;
        worst = std::max(worst, detail::helmholtz_residual_hs(ms, 50, u));
    }
    {
        // 5D hypercylindrical: exercises the hyperspherical associated
        // Legendre factor inside a hypercylindrical chain
        physics::ModeSpec ms;
        ms.system = physics::System::hypercylindrical;
        ms.dim = 5;
        ms.m = 0;
        ms.q_chain = {1, 2};
        ms.k = 1.0;
        ms.K = 0.4;
        worst = std::max(worst, detail::helmholtz_residual_hc(ms, 50, u));
    }
    return detail::bounded("physics: assembled-mode Helmholtz residuals",
                           worst, 1e-4, t);
}

/// r^(1-N/2) J_sigma(kr) against the radial equation
/// r^2 R'' + (N-1) r R' + [k^2 r^2 - q(q+1)] R = 0, plus the closed-form
/// order checks sigma = q + 1/2 (N = 3) and sigma = sqrt(3) (N = 4, q = 1).
inline std::vector<CheckResult> check_radial_law() {
    std::vector<CheckResult> out;
    detail::Timer t;
    const std::pair<int, int> cases[] = {{3, 1}, {4, 1}, {5, 2}};
    constexpr double k = 1.0;
    constexpr double h = 1e-3;
    const auto grid = detail::linspace(0.5, 3.0, 50);
    double worst = 0.0;
    for (const auto& [n, q] : cases) {
        const double sigma =
            physics::bessel_order(physics::System::hyperspherical, n, q).sigma;
        auto R = [&](double r) {
            return std::pow(r, 1.0 - 0.5 * n) * specfun::bessel_j(sigma, k * r);
        };
        double scale = 0.0;
        for (double r : grid)
            scale = std::max(scale,
                             std::abs(R(r)) * (k * k * r * r + q * (q + 1.0)));
        for (double r : grid) {
            const double res = r * r * verify::fd_derivative(R, r, 2, h) +
                               (n - 1.0) * r * verify::fd_derivative(R, r, 1, h) +
                               (k * k * r * r - q * (q + 1.0)) * R(r);
            worst = std::max(worst, std::abs(res) / scale);
        }
    }
    out.push_back(
        detail::bounded("physics: radial equation residual", worst, 1e-6, t));

    detail::Timer t2;
    const bool exact_3 =
        physics::bessel_order(physics::System::hyperspherical, 3, 1).sigma ==
            1.5 &&
        physics::bessel_order(physics::System::hyperspherical, 3, 2).sigma ==
            2.5;
    const bool exact_4 =
        physics::bessel_order(physics::System::hyperspherical, 4, 1).sigma ==
        std::sqrt(3.0);
    out.push_back({"physics: Bessel order closed forms", exact_3 && exact_4,
                   exact_3 && exact_4 ? 0.0 : 1.0, 0.5, t2.seconds(),
                   "sigma = q+1/2 at N=3, sigma = sqrt(3) at N=4, q=1"});
    return out;
}

/// Second-order closed form versus the extended power sum, and the
/// exp(-i omega t) sign convention.
inline std::vector<CheckResult> check_dispersion() {
    std::vector<CheckResult> out;
    detail::Timer t;
    detail::Uniform u(0x5eed0007);
    double worst = 0.0;
    for (int it = 0; it < 100; ++it) {
        const double a = u(-2.0, 2.0);
        const double inv_b = u(-2.0, 2.0);
        const double inv_c2 = u(0.1, 2.0);
        const std::complex<double> omega(u(-3.0, 3.0), u(-1.0, 1.0));
        for (int sign : {1, -1}) {
            const auto ext = physics::dispersion(
                physics::PhysicsCoefficients::extended({a, inv_b, inv_c2}),
                omega, sign);
            // closed form k^2 = omega^2/c^2 - a -+ i omega / b
            const std::complex<double> i(0.0, 1.0);
            const auto closed = omega * omega * inv_c2 - a -
                                static_cast<double>(sign) * i * omega * inv_b;
            worst = std::max(worst, std::abs(ext - closed) /
                                        std::max(1.0, std::abs(closed)));
        }
    }
    out.push_back(detail::bounded(
        "physics: dispersion original = extended", worst, 1e-14, t));

    detail::Timer t2;
    const std::complex<double> omega(1.7, 0.0);
    const std::complex<double> i(0.0, 1.0);
    const double a = 0.8, inv_b = 0.4, inv_c2 = 1.0;
    const auto got = physics::dispersion(
        physics::PhysicsCoefficients::original(a, inv_b, inv_c2), omega, -1);
    const auto want = -a + i * omega * inv_b + omega * omega * inv_c2;
    out.push_back(detail::bounded(
        "physics: frequency-domain sign convention", std::abs(got - want),
        1e-14, t2, "k^2 = -a + i omega/b + omega^2/c^2 under exp(-i omega t)"));
    return out;
}

/// FD Cartesian Laplacian of the sinusoidal product equals -(sum k_n^2)
/// times the mode.
inline CheckResult check_cartesian_modes() {
    detail::Timer t;
    detail::Uniform u(0x5eed0008);
    double worst = 0.0;
    for (int n : {3, 5}) {
        std::vector<double> kv(n), ph(n), amp(n, 1.0);
        for (int i = 0; i < n; ++i) {
            kv[i] = u(0.3, 1.5);
            ph[i] = u(0.0, 2.0 * coords::pi);
        }
        const double k2 = physics::cartesian_wavenumber_sq(kv);
        auto f = [&](const coords::CartesianPoint& x) {
            return physics::cartesian_mode(kv, ph, amp, x);
        };
        for (int it = 0; it < 10; ++it) {
            coords::CartesianPoint x;
            x.x.resize(n);
            for (auto& c : x.x) c = u(-2.0, 2.0);
            double lap = 0.0;
            for (int i = 0; i < n; ++i) {
                auto fi = [&](double xi) {
                    auto q = x;
                    q.x[i] = xi;
                    return f(q);
                };
                lap += verify::fd_derivative(fi, x.x[i], 2, 1e-3);
            }
            worst = std::max(worst, std::abs(lap + k2 * f(x)) / k2);
        }
    }
    return detail::bounded("physics: Cartesian sinusoid Laplacian", worst,
                           1e-6, t);
}

inline std::vector<CheckResult> physics_suite() {
    std::vector<CheckResult> out;
    out.push_back(check_helmholtz_modes());
    auto radial = check_radial_law();
    out.insert(out.end(), radial.begin(), radial.end());
    auto disp = check_dispersion();
    out.insert(out.end(), disp.begin(), disp.end());
    out.push_back(check_cartesian_modes());
    return out;
}

inline std::vector<CheckResult> all_suites() {
    std::vector<CheckResult> out;
    auto add = [&](std::vector<CheckResult> v) {
        out.insert(out.end(), v.begin(), v.end());
    };
    add(coords_suite());
    add(specfun_suite());
    add(legendre_suite());
    add(physics_suite());
    return out;
}

}  // namespace hyperharm::suite
