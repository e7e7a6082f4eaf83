#pragma once

// Self-contained double-precision kernels: Gamma function, Gauss
// hypergeometric series 2F1, Bessel/Neumann functions of arbitrary real
// order, and spherical Bessel functions. Series-based, validated for
// desk-scale arguments (Bessel: 0 <= x <= 30).

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyperharm::specfun {

inline constexpr double pi = std::numbers::pi;

/// One (alpha, beta; gamma; z) evaluation request for the Gauss series.
struct Hyp2F1Call {
    double alpha;
    double beta;
    double gamma;
    double z;
};

namespace detail {

inline bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::floor(v);
}

// sin(pi*x) and cos(pi*x) with exact reduction at integer/half-integer x;
// the naive sin(pi*x) loses all digits near large integer arguments.
inline double sin_pi(double x) {
    double n = std::nearbyint(x);
    double s = std::sin(pi * (x - n));
    return (static_cast<long long>(n) & 1LL) ? -s : s;
}

inline double cos_pi(double x) {
    double n = std::nearbyint(x);
    double c = std::cos(pi * (x - n));
    return (static_cast<long long>(n) & 1LL) ? -c : c;
}

}  // namespace detail

/// Gamma function, Lanczos approximation (g = 7, 9 coefficients) with the
/// reflection formula for x < 1/2. Relative error below 1e-12 on [0.5, 50].
/// Throws std::domain_error at the poles x = 0, -1, -2, ...
inline double gamma_fn(double x) {
    if (detail::is_nonpositive_integer(x))
        throw std::domain_error("gamma_fn: pole at non-positive integer x = " +
                                std::to_string(x));
    if (x < 0.5)
        return pi / (detail::sin_pi(x) * gamma_fn(1.0 - x));
    static constexpr double g = 7.0;
    static constexpr double coef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
    const double z = x - 1.0;
    double acc = coef[0];
    for (int i = 1; i < 9; ++i) acc += coef[i] / (z + i);
    const double t = z + g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

inline constexpr long hyp2f1_max_terms = 100000;

/// Direct power-series sum of F(alpha, beta; gamma; z) with incremental
/// Pochhammer ratios, truncated when |term| < 1e-16 |partial sum| or the
/// series terminates (alpha or beta a non-positive integer). Valid for
/// |z| < 1 or for terminating series; no transformation is applied, so
/// conditioning near z = 1 is the caller's concern (see hyp2f1).
inline double hyp2f1_series(double alpha, double beta, double gamma, double z) {
    double term = 1.0;
    double sum = 1.0;
    for (long k = 0; k < hyp2f1_max_terms; ++k) {
        const double ak = alpha + static_cast<double>(k);
        const double bk = beta + static_cast<double>(k);
        const double ck = gamma + static_cast<double>(k);
        if (ak == 0.0 || bk == 0.0) return sum;  // terminating polynomial
        if (ck == 0.0)
            throw std::domain_error(
                "hyp2f1: lower-parameter pole reached before termination "
                "(gamma is a non-positive integer)");
        term *= ak * bk / (ck * static_cast<double>(k + 1)) * z;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    }
    throw std::runtime_error("hyp2f1: series did not converge within " +
                             std::to_string(hyp2f1_max_terms) + " terms");
}

inline bool hyp2f1_terminates(double alpha, double beta) {
    return detail::is_nonpositive_integer(alpha) ||
           detail::is_nonpositive_integer(beta);
}

/// Gauss hypergeometric function F(alpha, beta; gamma; z). Terminating
/// series are summed directly (any z); otherwise |z| < 1 is required and
/// for 0.5 < z < 1 the Euler transformation
///   F(alpha, beta; gamma; z) = (1-z)^(gamma-alpha-beta)
///                              F(gamma-alpha, gamma-beta; gamma; z)
/// is applied before summing, for conditioning.
inline double hyp2f1(double alpha, double beta, double gamma, double z) {
    if (hyp2f1_terminates(alpha, beta) || z == 0.0)
        return hyp2f1_series(alpha, beta, gamma, z);
    if (std::abs(z) >= 1.0)
        throw std::domain_error(
            "hyp2f1: divergent, |z| >= 1 and the series does not terminate");
    if (z > 0.5)
        return std::pow(1.0 - z, gamma - alpha - beta) *
               hyp2f1_series(gamma - alpha, gamma - beta, gamma, z);
    return hyp2f1_series(alpha, beta, gamma, z);
}

inline double hyp2f1(const Hyp2F1Call& c) {
    return hyp2f1(c.alpha, c.beta, c.gamma, c.z);
}

/// Bessel order record; sigma >= 0.
struct BesselOrder {
    double sigma;
};

inline constexpr double bessel_max_x = 30.0;

namespace detail {

// Ascending series for J_nu, any real nu with nu+1 not a non-positive
// integer (guaranteed by callers). For nu < 0 the early-termination test is
// suppressed until the k = ceil(-nu) term has entered the sum: the leading
// terms are suppressed by the near-pole 1/Gamma and the dominant terms come
// later.
inline double bessel_j_series(double nu, double x) {
    const double half = 0.5 * x;
    const double q = half * half;
    double term = std::pow(half, nu) / gamma_fn(nu + 1.0);
    double sum = term;
    const long k_min = nu < 0.0 ? static_cast<long>(std::ceil(-nu)) + 1 : 0;
    for (long k = 1; k < 2000; ++k) {
        term *= -q / (static_cast<double>(k) * (static_cast<double>(k) + nu));
        sum += term;
        if (k >= k_min && std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    }
    throw std::runtime_error("bessel_j: series did not converge");
}

// Neumann function of non-integer order via the reflection formula.
inline double bessel_y_noninteger(double nu, double x) {
    return (bessel_j_series(nu, x) * cos_pi(nu) - bessel_j_series(-nu, x)) /
           sin_pi(nu);
}

inline void check_bessel_arg(const char* who, double x) {
    if (x < 0.0)
        throw std::domain_error(std::string(who) + ": argument must be >= 0");
    if (x > bessel_max_x)
        throw std::domain_error(std::string(who) +
                                ": argument above validated series domain "
                                "x <= 30");
}

}  // namespace detail

/// Bessel function of the first kind J_sigma(x), sigma >= 0, 0 <= x <= 30.
/// Power series sum_k (-1)^k / (k! Gamma(k+sigma+1)) (x/2)^(2k+sigma).
inline double bessel_j(double sigma, double x) {
    if (sigma < 0.0)
        throw std::domain_error("bessel_j: order sigma must be >= 0");
    detail::check_bessel_arg("bessel_j", x);
    if (x == 0.0) return sigma == 0.0 ? 1.0 : 0.0;
    return detail::bessel_j_series(sigma, x);
}

/// Neumann (Bessel second kind) function Y_sigma(x), sigma >= 0, x > 0.
/// Non-integer order uses Y = (J_sigma cos(sigma pi) - J_{-sigma}) /
/// sin(sigma pi); within 1e-8 of an integer the limit is approached by
/// averaging the evaluations at sigma +- 1e-5 (accuracy ~1e-6, documented).
inline double bessel_y(double sigma, double x) {
    if (sigma < 0.0)
        throw std::domain_error("bessel_y: order sigma must be >= 0");
    if (x <= 0.0)
        throw std::domain_error("bessel_y: singular at x <= 0");
    detail::check_bessel_arg("bessel_y", x);
    const double nearest = std::nearbyint(sigma);
    if (std::abs(sigma - nearest) < 1e-8) {
        constexpr double eps = 1e-5;
        return 0.5 * (detail::bessel_y_noninteger(nearest + eps, x) +
                      detail::bessel_y_noninteger(nearest - eps, x));
    }
    return detail::bessel_y_noninteger(sigma, x);
}

/// Hankel combinations H(1) = J + iY, H(2) = J - iY. Which kind pairs with
/// which time-sign convention is a caller choice; nothing here binds it.
inline std::complex<double> hankel(int kind, double sigma, double x) {
    if (kind != 1 && kind != 2)
        throw std::invalid_argument("hankel: kind must be 1 or 2");
    const double j = bessel_j(sigma, x);
    const double y = bessel_y(sigma, x);
    return {j, kind == 1 ? y : -y};
}

enum class SphericalKind { j, y };

/// Spherical Bessel functions j_q(x) = sqrt(pi/(2x)) J_{q+1/2}(x) and
/// y_q(x) = sqrt(pi/(2x)) Y_{q+1/2}(x), standard argument-based
/// normalization (makes j_0(x) = sin(x)/x hold exactly).
inline double spherical_bessel(SphericalKind kind, int q, double x) {
    if (q < 0)
        throw std::domain_error("spherical_bessel: index q must be >= 0");
    if (kind == SphericalKind::y) {
        if (x <= 0.0)
            throw std::domain_error("spherical_bessel: y_q singular at x <= 0");
    } else {
        if (x < 0.0)
            throw std::domain_error(
                "spherical_bessel: argument must be >= 0");
        if (x == 0.0) return q == 0 ? 1.0 : 0.0;
    }
    const double factor = std::sqrt(pi / (2.0 * x));
    return factor * (kind == SphericalKind::j ? bessel_j(q + 0.5, x)
                                              : bessel_y(q + 0.5, x));
}

}  // namespace hyperharm::specfun
