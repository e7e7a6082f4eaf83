#pragma once

// Dispersion relations, Bessel-order and eigenvalue-chain computation, and
// assembly of separated modes of the generalized equation of mathematical
// physics
//
//   laplacian F = A_0 F + A_1 dF/dt + ... + A_L d^L F/dt^L
//
// in hyperspherical and hypercylindrical coordinates. A single mode is the
// product of a radial power, a Bessel factor, exponentials in longitude and
// time (and axial position for hypercylindrical), one ordinary associated
// Legendre factor for the last latitude and one hyperspherical associated
// Legendre factor per remaining latitude.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "coords.hpp"
#include "legendre.hpp"
#include "specfun.hpp"

namespace hyperharm::physics {

enum class System { hyperspherical, hypercylindrical };
enum class BesselKind { J, Y };

/// Time-operator coefficients. The second-order form (a, 1/b, 1/c^2) maps
/// onto the extended list as A_0 = a, A_1 = 1/b, A_2 = 1/c^2.
struct PhysicsCoefficients {
    std::vector<double> A;  // A_0 .. A_L, non-empty

    static PhysicsCoefficients original(double a, double inv_b,
                                        double inv_c2) {
        return {{a, inv_b, inv_c2}};
    }
    static PhysicsCoefficients extended(std::vector<double> coeffs) {
        if (coeffs.empty())
            throw std::invalid_argument(
                "PhysicsCoefficients: extended list must be non-empty");
        return {std::move(coeffs)};
    }
};

/// Squared radial wavenumber for the time factor exp(sign * i * omega * t):
/// k^2 = -sum_l A_l (sign * i * omega)^l. For the second-order form this is
/// k^2 = omega^2/c^2 - a -+ i*omega/b; sign = -1 (the exp(-i omega t)
/// frequency-domain convention) gives k^2 = -a + i*omega/b + omega^2/c^2.
inline std::complex<double> dispersion(const PhysicsCoefficients& c,
                                       std::complex<double> omega,
                                       int time_sign) {
    if (time_sign != 1 && time_sign != -1)
        throw std::invalid_argument("dispersion: time_sign must be +1 or -1");
    if (c.A.empty())
        throw std::invalid_argument("dispersion: empty coefficient list");
    const std::complex<double> i_omega =
        std::complex<double>(0.0, static_cast<double>(time_sign)) * omega;
    std::complex<double> power(1.0, 0.0);
    std::complex<double> acc(0.0, 0.0);
    for (double a : c.A) {
        acc += a * power;
        power *= i_omega;
    }
    return -acc;
}

/// Real radial wavenumber from a squared dispersion result. Mode assembly is
/// restricted to real k > 0 (the Bessel kernels are real-argument only);
/// anything else is rejected here rather than silently truncated.
inline double real_wavenumber(std::complex<double> k2) {
    const double scale = std::abs(k2);
    if (std::abs(k2.imag()) > 1e-12 * (scale > 0.0 ? scale : 1.0))
        throw std::domain_error(
            "real_wavenumber: complex k^2 is unsupported for mode assembly");
    if (!(k2.real() > 0.0))
        throw std::domain_error(
            "real_wavenumber: k^2 must be positive for an oscillatory radial "
            "factor");
    return std::sqrt(k2.real());
}

/// Radial wavenumber of a hypercylindrical mode derived from a total
/// wavenumber: kbar = sqrt(k_total^2 - K^2), which must stay positive.
inline double radial_from_total(double k_total, double k_axial) {
    const double k2 = k_total * k_total - k_axial * k_axial;
    if (!(k2 > 0.0))
        throw std::domain_error(
            "radial_from_total: k_total^2 - K^2 must be > 0");
    return std::sqrt(k2);
}

/// Radial Bessel order: sigma^2 = q(q+1) + (N/2 - 1)^2 hyperspherical,
/// sigma^2 = q(q+1) + (N/2 - 3/2)^2 hypercylindrical.
inline specfun::BesselOrder bessel_order(System system, int dim, int q) {
    if (q < 1) throw std::invalid_argument("bessel_order: q >= 1 required");
    double half;
    if (system == System::hyperspherical) {
        if (dim < 2)
            throw std::invalid_argument("bessel_order: N >= 2 required");
        half = 0.5 * dim - 1.0;
    } else {
        if (dim < 3)
            throw std::invalid_argument("bessel_order: N >= 3 required");
        half = 0.5 * dim - 1.5;
    }
    return {std::sqrt(q * (q + 1.0) + half * half)};
}

/// Parameters of one hyperspherical associated Legendre factor: latitude
/// theta_{N-n}, degree nu = q_{N-n}, order mu = sqrt(q_{N-n+1}(1+q_{N-n+1})),
/// dimension 2*lambda = n-2 (hyperspherical) or n-3 (hypercylindrical).
struct ChainEntry {
    int n;
    double nu;
    double mu;
    double lambda;
};

/// Full angular decomposition of an eigenvalue chain: the last latitude is
/// an ordinary associated Legendre factor of degree `last_degree` (order m
/// supplied by the mode), every earlier latitude one hyperspherical
/// associated Legendre factor.
struct ChainDecomposition {
    std::vector<ChainEntry> hyper;  // indices n = 3..N-1 (hs), 4..N-1 (hc)
    int last_degree = 0;            // q_{N-2} (hs) or q_{N-3} (hc)
};

inline ChainDecomposition chain_params(System system, int dim,
                                       const std::vector<int>& q_chain) {
    const int expected =
        system == System::hyperspherical ? dim - 2 : dim - 3;
    if (static_cast<int>(q_chain.size()) != expected)
        throw std::invalid_argument(
            "chain_params: chain length must be N-2 (hyperspherical) or N-3 "
            "(hypercylindrical), got " +
            std::to_string(q_chain.size()));
    for (int q : q_chain)
        if (q < 1)
            throw std::invalid_argument(
                "chain_params: chain entries must be positive integers");
    ChainDecomposition d;
    if (q_chain.empty()) return d;
    d.last_degree = q_chain.back();
    const int n_lo = system == System::hyperspherical ? 3 : 4;
    for (int n = n_lo; n <= dim - 1; ++n) {
        const int i_nu = dim - n - 1;  // 0-based index of q_{N-n}
        const int q_next = q_chain[i_nu + 1];
        const double lambda = system == System::hyperspherical
                                  ? 0.5 * (n - 2)
                                  : 0.5 * (n - 3);
        d.hyper.push_back(
            {n, static_cast<double>(q_chain[i_nu]),
             std::sqrt(q_next * (q_next + 1.0)), lambda});
    }
    return d;
}

/// One separated mode. `k` is the radial wavenumber; `K` the axial
/// wavenumber (hypercylindrical only, must stay 0 for hyperspherical).
/// Empty chains (N = 2 hyperspherical, N = 3 hypercylindrical) carry no
/// Legendre factor and use the azimuthal order |m| for the Bessel factor.
struct ModeSpec {
    System system = System::hyperspherical;
    int dim = 3;
    int m = 0;
    std::vector<int> q_chain;
    double k = 1.0;
    double K = 0.0;
    std::complex<double> omega{0.0, 0.0};
    BesselKind bessel_kind = BesselKind::J;
    int phi_sign = 1;
    int time_sign = -1;
};

/// Total squared wavenumber entering the Helmholtz residual: k^2 for
/// hyperspherical modes, k^2 + K^2 for hypercylindrical.
inline double helmholtz_k2(const ModeSpec& ms) {
    return ms.system == System::hyperspherical ? ms.k * ms.k
                                               : ms.k * ms.k + ms.K * ms.K;
}

namespace detail {

inline void validate(const ModeSpec& ms) {
    if (ms.phi_sign * ms.phi_sign != 1 || ms.time_sign * ms.time_sign != 1)
        throw std::invalid_argument("ModeSpec: signs must be +1 or -1");
    if (!(ms.k > 0.0))
        throw std::domain_error("ModeSpec: radial wavenumber k > 0 required");
    if (ms.system == System::hyperspherical && ms.K != 0.0)
        throw std::invalid_argument(
            "ModeSpec: axial wavenumber K applies to hypercylindrical modes "
            "only");
    chain_params(ms.system, ms.dim, ms.q_chain);  // length/positivity
}

inline double radial_factor(const ModeSpec& ms, double r) {
    if (!(r > 0.0))
        throw std::domain_error("mode_eval: interior point required (r > 0)");
    double sigma;
    if (ms.q_chain.empty())
        sigma = std::abs(ms.m);
    else
        sigma = bessel_order(ms.system, ms.dim, ms.q_chain.front()).sigma;
    const double power = ms.system == System::hyperspherical
                             ? 1.0 - 0.5 * ms.dim
                             : 0.5 * (3.0 - ms.dim);
    const double bess = ms.bessel_kind == BesselKind::J
                            ? specfun::bessel_j(sigma, ms.k * r)
                            : specfun::bessel_y(sigma, ms.k * r);
    return std::pow(r, power) * bess;
}

inline double latitude_factor(const ModeSpec& ms,
                              const std::vector<double>& thetas) {
    for (double th : thetas)
        if (!(th > 0.0 && th < coords::pi))
            throw std::domain_error(
                "mode_eval: interior point required (0 < theta < pi)");
    if (ms.q_chain.empty()) return 1.0;
    const auto d = chain_params(ms.system, ms.dim, ms.q_chain);
    double v = legendre::assoc_legendre_p(d.last_degree, std::abs(ms.m),
                                          std::cos(thetas.back()));
    for (const auto& e : d.hyper) {
        const legendre::HyperLegendreParams hp{e.nu, e.mu, e.lambda,
                                               legendre::Branch::plus};
        v *= legendre::hyper_assoc_legendre(hp,
                                            std::cos(thetas[ms.dim - e.n - 1]));
    }
    return v;
}

inline std::complex<double> phase_factor(const ModeSpec& ms, double phi,
                                         double t) {
    const std::complex<double> i(0.0, 1.0);
    return std::exp(i * (static_cast<double>(ms.phi_sign * ms.m) * phi) +
                    static_cast<double>(ms.time_sign) * i * ms.omega * t);
}

}  // namespace detail

inline std::complex<double> mode_eval(const ModeSpec& ms,
                                      const coords::HypersphericalPoint& p,
                                      double t) {
    if (ms.system != System::hyperspherical)
        throw std::invalid_argument(
            "mode_eval: hyperspherical point supplied to a hypercylindrical "
            "mode");
    if (p.dim != ms.dim)
        throw std::invalid_argument("mode_eval: point/mode dimension mismatch");
    detail::validate(ms);
    return detail::radial_factor(ms, p.r) * detail::latitude_factor(ms, p.thetas) *
           detail::phase_factor(ms, p.phi, t);
}

inline std::complex<double> mode_eval(const ModeSpec& ms,
                                      const coords::HypercylindricalPoint& p,
                                      double t) {
    if (ms.system != System::hypercylindrical)
        throw std::invalid_argument(
            "mode_eval: hypercylindrical point supplied to a hyperspherical "
            "mode");
    if (p.dim != ms.dim)
        throw std::invalid_argument("mode_eval: point/mode dimension mismatch");
    detail::validate(ms);
    const std::complex<double> i(0.0, 1.0);
    return detail::radial_factor(ms, p.r) * detail::latitude_factor(ms, p.thetas) *
           detail::phase_factor(ms, p.phi, t) * std::exp(i * ms.K * p.z);
}

/// Product of axis-wise sinusoids prod_n C_n cos(k_n x_n - alpha_n); an
/// eigenfunction of the Cartesian Laplacian with eigenvalue -sum k_n^2.
inline double cartesian_mode(const std::vector<double>& wavevector,
                             const std::vector<double>& phases,
                             const std::vector<double>& amplitudes,
                             const coords::CartesianPoint& x) {
    const std::size_t n = x.x.size();
    if (wavevector.size() != n || phases.size() != n || amplitudes.size() != n)
        throw std::invalid_argument(
            "cartesian_mode: wavevector/phases/amplitudes must match the "
            "point dimension");
    double v = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        v *= amplitudes[i] * std::cos(wavevector[i] * x.x[i] - phases[i]);
    return v;
}

/// Wavevector constraint k^2 = sum_n k_n^2.
inline double cartesian_wavenumber_sq(const std::vector<double>& wavevector) {
    double s = 0.0;
    for (double k : wavevector) s += k * k;
    return s;
}

}  // namespace hyperharm::physics
