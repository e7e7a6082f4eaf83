#pragma once

// The Legendre hierarchy: Legendre, associated Legendre, hyperspherical
// Legendre and hyperspherical associated Legendre functions of the first
// kind, all expressed through the Gauss hypergeometric series. The
// hyperspherical associated family P^mu_{nu,lambda} solves
//
//   G'' + (1+2 lambda) cot(theta) G' + [nu(nu+1) - mu^2 csc^2(theta)] G = 0
//
// and reduces to (1-x^2)^vartheta F(alpha, beta; 1/2; x^2) with x =
// cos(theta), where vartheta solves vartheta^2 + lambda*vartheta - mu^2/4 = 0
// and alpha, beta solve
//
//   chi^2 - (2 vartheta + lambda + 1/2) chi
//        + [vartheta^2 + vartheta/2 + lambda*vartheta - nu(nu+1)/4] = 0.

#include <cmath>
#include <stdexcept>

#include "specfun.hpp"

namespace hyperharm::legendre {

/// Root choice for vartheta in vartheta^2 + lambda*vartheta - mu^2/4 = 0.
enum class Branch { plus, minus };

/// The (degree, order, dimension, branch) quadruple naming one
/// hyperspherical associated Legendre solution.
struct HyperLegendreParams {
    double nu;
    double mu;  // >= 0
    double lambda;
    Branch branch = Branch::plus;
};

/// Reduced 2F1 parameters of one solution; gamma_lower is always 1/2.
struct ReducedParams {
    double vartheta;
    double alpha;
    double beta;
    double gamma_lower;
};

namespace detail {

inline bool is_nonneg_integer(double v) {
    return v >= 0.0 && v == std::floor(v) && v < 1e9;
}

// Ferrers-convention associated Legendre for integer order and degree,
// (1-x^2)^(m/2) d^m/dx^m P_l(x) via the standard three-term recurrence.
// No Condon-Shortley phase.
inline double assoc_legendre_int(int ell, int m, double x) {
    double pmm = 1.0;
    if (m > 0) {
        const double s = std::sqrt((1.0 - x) * (1.0 + x));
        double f = 1.0;
        for (int i = 1; i <= m; ++i) {
            pmm *= f * s;
            f += 2.0;
        }
    }
    if (ell == m) return pmm;
    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    if (ell == m + 1) return pmmp1;
    double pll = 0.0;
    for (int ll = m + 2; ll <= ell; ++ll) {
        pll = ((2.0 * ll - 1.0) * x * pmmp1 - (ll + m - 1.0) * pmm) /
              static_cast<double>(ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

}  // namespace detail

/// Legendre function of the first kind, P_nu(x) = F(-nu, 1+nu; 1; (1-x)/2).
/// Integer nu >= 0 terminates to the Legendre polynomial; non-integer nu
/// diverges at x = -1 (propagated from the series).
inline double legendre_p(double nu, double x) {
    if (std::abs(x) > 1.0)
        throw std::domain_error("legendre_p: |x| <= 1 required");
    return specfun::hyp2f1(-nu, 1.0 + nu, 1.0, 0.5 * (1.0 - x));
}

/// Associated Legendre function of the first kind on -1 < x < 1, Ferrers
/// convention, no Condon-Shortley phase. Non-integer order mu uses
///   [(1+x)/(1-x)]^(mu/2) / Gamma(1-mu) F(-nu, nu+1; 1-mu; (1-x)/2);
/// integer order m >= 1 requires integer degree (the 1/Gamma(1-m) = 0
/// degeneracy) and goes through the recurrence instead.
inline double assoc_legendre_p(double nu, double mu, double x) {
    if (mu < 0.0)
        throw std::domain_error("assoc_legendre_p: order mu must be >= 0");
    if (!(x > -1.0 && x < 1.0))
        throw std::domain_error("assoc_legendre_p: -1 < x < 1 required");
    if (detail::is_nonneg_integer(mu)) {
        const int m = static_cast<int>(mu);
        if (m == 0) return legendre_p(nu, x);
        // nu(nu+1) is invariant under nu -> -1-nu, so negative integer
        // degrees map onto -nu-1.
        double nu_eff = nu < 0.0 && nu == std::floor(nu) ? -nu - 1.0 : nu;
        if (!detail::is_nonneg_integer(nu_eff))
            throw std::domain_error(
                "assoc_legendre_p: integer order mu >= 1 requires integer "
                "degree nu (Gamma(1-mu) pole)");
        const int ell = static_cast<int>(nu_eff);
        if (ell < m) return 0.0;
        return detail::assoc_legendre_int(ell, m, x);
    }
    const double pref = std::pow((1.0 + x) / (1.0 - x), 0.5 * mu) /
                        specfun::gamma_fn(1.0 - mu);
    return pref * specfun::hyp2f1(-nu, nu + 1.0, 1.0 - mu, 0.5 * (1.0 - x));
}

/// Hyperspherical Legendre function of the first kind,
///   P_{nu,lambda}(x) = F(alpha, beta; 1+lambda; (1-x)/2),
///   alpha, beta = lambda + 1/2 +- sqrt((lambda+1/2)^2 + nu(nu+1)).
/// Normalized to 1 at x = 1.
inline double hyper_legendre(double nu, double lambda, double x) {
    if (std::abs(x) > 1.0)
        throw std::domain_error("hyper_legendre: |x| <= 1 required");
    const double rad = (lambda + 0.5) * (lambda + 0.5) + nu * (nu + 1.0);
    if (rad < 0.0)
        throw std::domain_error(
            "hyper_legendre: negative radicand gives complex 2F1 parameters");
    const double root = std::sqrt(rad);
    return specfun::hyp2f1(lambda + 0.5 + root, lambda + 0.5 - root,
                           1.0 + lambda, 0.5 * (1.0 - x));
}

/// Reduced 2F1 parameters for the hyperspherical associated Legendre
/// function: vartheta from its quadratic, then alpha, beta as the roots of
/// chi^2 - (2 vartheta + lambda + 1/2) chi + [vartheta^2 + vartheta/2 +
/// lambda*vartheta - nu(nu+1)/4] = 0, i.e.
///   2 {alpha, beta} = 2 vartheta + lambda + 1/2
///                     +- sqrt((lambda+1/2)^2 + nu(nu+1)).
inline ReducedParams hyper_assoc_params(const HyperLegendreParams& p) {
    if (p.mu < 0.0)
        throw std::domain_error("hyper_assoc_params: order mu must be >= 0");
    const double root_t = 0.5 * std::sqrt(p.lambda * p.lambda + p.mu * p.mu);
    const double vt =
        -0.5 * p.lambda + (p.branch == Branch::plus ? root_t : -root_t);
    const double rad = (p.lambda + 0.5) * (p.lambda + 0.5) + p.nu * (p.nu + 1.0);
    if (rad < 0.0)
        throw std::domain_error(
            "hyper_assoc_params: negative radicand gives complex 2F1 "
            "parameters");
    const double root = std::sqrt(rad);
    const double s = 2.0 * vt + p.lambda + 0.5;
    return {vt, 0.5 * (s + root), 0.5 * (s - root), 0.5};
}

/// Variant with an extra 4*vartheta^2 term inside the alpha/beta radicand.
/// For mu > 0 the resulting function does not satisfy the defining
/// differential equation; kept as the negative control behind
/// `verify legendre --erratum-check`.
inline ReducedParams hyper_assoc_params_uncorrected(
    const HyperLegendreParams& p) {
    if (p.mu < 0.0)
        throw std::domain_error("hyper_assoc_params: order mu must be >= 0");
    const double root_t = 0.5 * std::sqrt(p.lambda * p.lambda + p.mu * p.mu);
    const double vt =
        -0.5 * p.lambda + (p.branch == Branch::plus ? root_t : -root_t);
    const double rad = 4.0 * vt * vt + (p.lambda + 0.5) * (p.lambda + 0.5) +
                       p.nu * (p.nu + 1.0);
    if (rad < 0.0)
        throw std::domain_error(
            "hyper_assoc_params_uncorrected: negative radicand");
    const double root = std::sqrt(rad);
    const double s = 2.0 * vt + p.lambda + 0.5;
    return {vt, 0.5 * (s + root), 0.5 * (s - root), 0.5};
}

/// (1-x^2)^vartheta F(alpha, beta; 1/2; x^2) on -1 < x < 1. Equals 1 at
/// x = 0 exactly and is even in x.
inline double hyper_assoc_eval(const ReducedParams& rp, double x) {
    if (!(x > -1.0 && x < 1.0))
        throw std::domain_error(
            "hyper_assoc_legendre: -1 < x < 1 required (divergent at the "
            "endpoints)");
    const double one_minus_x2 = (1.0 - x) * (1.0 + x);
    return std::pow(one_minus_x2, rp.vartheta) *
           specfun::hyp2f1(rp.alpha, rp.beta, rp.gamma_lower, x * x);
}

/// Hyperspherical associated Legendre function of the first kind.
inline double hyper_assoc_legendre(const HyperLegendreParams& p, double x) {
    return hyper_assoc_eval(hyper_assoc_params(p), x);
}

/// Coefficients of the theta-form defining equation
///   G'' + (1+2 lambda) cot(theta) G' + [nu(nu+1) - mu^2 csc^2(theta)] G.
/// lambda = 0 is the associated Legendre equation, mu = 0 the hyperspherical
/// Legendre equation, both zero the Legendre equation.
struct OdeCoefficients {
    double nu;
    double mu;
    double lambda;

    double damping(double theta) const {
        return (1.0 + 2.0 * lambda) / std::tan(theta);
    }
    double restoring(double theta) const {
        const double s = std::sin(theta);
        return nu * (nu + 1.0) - mu * mu / (s * s);
    }
    /// Residual functional G'' + damping*G' + restoring*G at one point.
    double residual(double g, double dg, double d2g, double theta) const {
        return d2g + damping(theta) * dg + restoring(theta) * g;
    }
};

/// ODE coefficient callback for the residual harness.
inline OdeCoefficients hyper_assoc_ode_residual_form(
    const HyperLegendreParams& p) {
    return {p.nu, p.mu, p.lambda};
}

inline OdeCoefficients hyper_assoc_ode_residual_form(double nu, double mu,
                                                     double lambda) {
    return {nu, mu, lambda};
}

}  // namespace hyperharm::legendre
