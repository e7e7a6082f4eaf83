#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "hyperharm/legendre.hpp"
#include "hyperharm/mode_json.hpp"
#include "hyperharm/physics.hpp"
#include "hyperharm/specfun.hpp"
#include "hyperharm/verify.hpp"

using namespace hyperharm;
using physics::BesselKind;
using physics::ModeSpec;
using physics::System;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

struct Uniform {
    std::mt19937_64 rng;
    explicit Uniform(std::uint64_t seed) : rng(seed) {}
    double operator()(double lo, double hi) {
        return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    }
};

coords::HypersphericalPoint hs_point(int dim, double r,
                                     std::vector<double> thetas, double phi) {
    coords::HypersphericalPoint p;
    p.dim = dim;
    p.r = r;
    p.thetas = std::move(thetas);
    p.phi = phi;
    return p;
}

}  // namespace

TEST_CASE("dispersion closed forms") {
    using physics::PhysicsCoefficients;
    const std::complex<double> i(0.0, 1.0);
    // pure wave operator
    CHECK(physics::dispersion(PhysicsCoefficients::original(0.0, 0.0, 1.0),
                              {3.0, 0.0}, 1) == std::complex<double>(9.0, 0.0));
    CHECK(physics::dispersion(PhysicsCoefficients::original(1.0, 0.0, 1.0),
                              {2.0, 0.0}, 1) == std::complex<double>(3.0, 0.0));
    // frequency-domain convention reproduces k^2 = -a + i w / b + w^2 / c^2
    const std::complex<double> w(1.7, 0.0);
    const auto got = physics::dispersion(
        PhysicsCoefficients::original(0.8, 0.4, 1.0), w, -1);
    const auto want = -0.8 + i * w * 0.4 + w * w;
    CHECK(std::abs(got - want) < 1e-14);

    Uniform u(31);
    for (int it = 0; it < 100; ++it) {
        const double a = u(-2, 2), ib = u(-2, 2), ic2 = u(0.1, 2);
        const std::complex<double> omega(u(-3, 3), u(-1, 1));
        for (int sign : {1, -1}) {
            const auto ext = physics::dispersion(
                PhysicsCoefficients::extended({a, ib, ic2}), omega, sign);
            const auto closed = omega * omega * ic2 - a -
                                static_cast<double>(sign) * i * omega * ib;
            CHECK(std::abs(ext - closed) <=
                  1e-14 * std::max(1.0, std::abs(closed)));
        }
    }
    CHECK_THROWS_AS(physics::dispersion(PhysicsCoefficients::extended({}),
                                        {1.0, 0.0}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(physics::dispersion(
                        PhysicsCoefficients::original(0.0, 0.0, 1.0), w, 2),
                    std::invalid_argument);
}

TEST_CASE("real wavenumber bridge") {
    CHECK_THAT(physics::real_wavenumber({9.0, 0.0}), WithinRel(3.0, 1e-15));
    CHECK_THROWS_AS(physics::real_wavenumber({4.0, 0.1}), std::domain_error);
    CHECK_THROWS_AS(physics::real_wavenumber({-1.0, 0.0}), std::domain_error);
    CHECK_THAT(physics::radial_from_total(5.0, 3.0), WithinRel(4.0, 1e-15));
    CHECK_THROWS_AS(physics::radial_from_total(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(physics::radial_from_total(1.0, 2.5), std::domain_error);
    // helmholtz total wavenumber: k^2 (hs), k^2 + K^2 (hc)
    ModeSpec hs;
    hs.k = 2.0;
    CHECK(physics::helmholtz_k2(hs) == 4.0);
    ModeSpec hc;
    hc.system = System::hypercylindrical;
    hc.dim = 4;
    hc.q_chain = {1};
    hc.k = 2.0;
    hc.K = 1.5;
    CHECK(physics::helmholtz_k2(hc) == 6.25);
}

TEST_CASE("bessel order") {
    CHECK(physics::bessel_order(System::hyperspherical, 3, 2).sigma == 2.5);
    CHECK(physics::bessel_order(System::hyperspherical, 3, 1).sigma == 1.5);
    CHECK(physics::bessel_order(System::hyperspherical, 4, 1).sigma ==
          std::sqrt(3.0));
    // hypercylindrical N=4: sigma^2 = q(q+1) + 1/4
    CHECK(physics::bessel_order(System::hypercylindrical, 4, 1).sigma == 1.5);
    CHECK_THROWS_AS(physics::bessel_order(System::hyperspherical, 3, 0),
                    std::invalid_argument);
}

TEST_CASE("chain parameters") {
    {
        const auto d = physics::chain_params(System::hyperspherical, 4, {2, 3});
        CHECK(d.last_degree == 3);
        REQUIRE(d.hyper.size() == 1);
        CHECK(d.hyper[0].n == 3);
        CHECK(d.hyper[0].nu == 2.0);
        CHECK_THAT(d.hyper[0].mu, WithinRel(std::sqrt(12.0), 1e-15));
        CHECK(d.hyper[0].lambda == 0.5);
    }
    {
        const auto d =
            physics::chain_params(System::hyperspherical, 5, {1, 2, 3});
        CHECK(d.last_degree == 3);
        REQUIRE(d.hyper.size() == 2);
        CHECK(d.hyper[0].n == 3);
        CHECK(d.hyper[0].nu == 2.0);
        CHECK_THAT(d.hyper[0].mu, WithinRel(std::sqrt(12.0), 1e-15));
        CHECK(d.hyper[0].lambda == 0.5);
        CHECK(d.hyper[1].n == 4);
        CHECK(d.hyper[1].nu == 1.0);
        CHECK_THAT(d.hyper[1].mu, WithinRel(std::sqrt(6.0), 1e-15));
        CHECK(d.hyper[1].lambda == 1.0);
    }
    {
        const auto d =
            physics::chain_params(System::hypercylindrical, 5, {1, 2});
        CHECK(d.last_degree == 2);
        REQUIRE(d.hyper.size() == 1);
        CHECK(d.hyper[0].n == 4);
        CHECK(d.hyper[0].nu == 1.0);
        CHECK(d.hyper[0].lambda == 0.5);
    }
    // 4D hypercylindrical: no hyperspherical factors at all
    CHECK(physics::chain_params(System::hypercylindrical, 4, {2}).hyper.empty());
    CHECK_THROWS_AS(physics::chain_params(System::hyperspherical, 4, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(physics::chain_params(System::hyperspherical, 4, {1, 0}),
                    std::invalid_argument);
}

TEST_CASE("hypercylindrical formulas follow from N -> N-1") {
    for (int n = 4; n <= 8; ++n)
        for (int q = 1; q <= 3; ++q)
            CHECK(physics::bessel_order(System::hypercylindrical, n, q).sigma ==
                  physics::bessel_order(System::hyperspherical, n - 1, q).sigma);
    const std::vector<int> chain{2, 1, 3};
    const auto hc = physics::chain_params(System::hypercylindrical, 6, chain);
    const auto hs = physics::chain_params(System::hyperspherical, 5, chain);
    CHECK(hc.last_degree == hs.last_degree);
    REQUIRE(hc.hyper.size() == hs.hyper.size());
    for (std::size_t i = 0; i < hc.hyper.size(); ++i) {
        CHECK(hc.hyper[i].n == hs.hyper[i].n + 1);
        CHECK(hc.hyper[i].nu == hs.hyper[i].nu);
        CHECK(hc.hyper[i].mu == hs.hyper[i].mu);
        CHECK(hc.hyper[i].lambda == hs.hyper[i].lambda);
    }
}

TEST_CASE("3D mode reduces to the spherical factorization") {
    ModeSpec ms;
    ms.system = System::hyperspherical;
    ms.dim = 3;
    ms.m = 1;
    ms.q_chain = {2};
    ms.k = 1.3;
    Uniform u(32);
    for (int it = 0; it < 10; ++it) {
        const double r = u(0.5, 3.0);
        const double th = u(0.4, coords::pi - 0.4);
        const double phi = u(0.0, 2.0 * coords::pi);
        const auto got = physics::mode_eval(ms, hs_point(3, r, {th}, phi), 0.0);
        const std::complex<double> i(0.0, 1.0);
        const auto want = std::pow(r, -0.5) *
                          specfun::bessel_j(2.5, ms.k * r) *
                          legendre::assoc_legendre_p(2.0, 1.0, std::cos(th)) *
                          std::exp(i * phi);
        CHECK(std::abs(got - want) <= 1e-13 * std::abs(want));
    }
}

TEST_CASE("4D mode frozen value") {
    ModeSpec ms;
    ms.system = System::hyperspherical;
    ms.dim = 4;
    ms.m = 0;
    ms.q_chain = {1, 1};
    ms.k = 1.0;
    const auto v = physics::mode_eval(ms, hs_point(4, 2.0, {1.0, 1.2}, 0.5), 0.0);
    // 0.5 * J_sqrt3(2) * P_1(cos 1.2) * Psi(cos 1.0), high-precision reference
    CHECK_THAT(v.real(), WithinRel(0.079357649870448230125, 1e-12));
    CHECK(v.imag() == 0.0);
}

TEST_CASE("4D hypercylindrical mode equals the spherical-type product") {
    ModeSpec ms;
    ms.system = System::hypercylindrical;
    ms.dim = 4;
    ms.m = 0;
    ms.q_chain = {1};
    ms.k = 1.0;
    ms.K = 0.0;
    Uniform u(33);
    for (int it = 0; it < 10; ++it) {
        const double r = u(0.5, 3.0);
        const double th = u(0.4, coords::pi - 0.4);
        const double phi = u(0.0, 2.0 * coords::pi);
        const double z = u(-5.0, 5.0);
        coords::HypercylindricalPoint p;
        p.dim = 4;
        p.r = r;
        p.thetas = {th};
        p.phi = phi;
        p.z = z;
        const auto got = physics::mode_eval(ms, p, 0.0);
        const auto want = std::pow(r, -0.5) * specfun::bessel_j(1.5, r) *
                          legendre::legendre_p(1.0, std::cos(th));
        // K = 0: no z dependence, spherical-type radial and latitude factors
        CHECK(std::abs(got - want) <= 1e-13 * std::abs(want));
    }
}

TEST_CASE("non-monotone chains are accepted and solve the equation") {
    // chain entries need not decrease; (1,2) puts a larger constant after a
    // smaller one and must still assemble an exact solution
    ModeSpec ms;
    ms.system = System::hyperspherical;
    ms.dim = 4;
    ms.m = 1;
    ms.q_chain = {1, 2};
    ms.k = 1.0;
    auto f = [&](const coords::HypersphericalPoint& p) {
        return physics::mode_eval(ms, p, 0.0);
    };
    Uniform u(34);
    double worst = 0.0, scale = 0.0;
    for (int it = 0; it < 8; ++it) {
        coords::HypersphericalPoint p;
        p.dim = 4;
        p.r = u(0.5, 3.0);
        p.thetas = {u(0.4, coords::pi - 0.4), u(0.4, coords::pi - 0.4)};
        p.phi = u(0.0, 2.0 * coords::pi);
        const auto val = f(p);
        const auto lap = verify::laplacian_fd(4, f, p, 1e-3);
        worst = std::max(worst, std::abs(lap + val));
        scale = std::max(scale, std::abs(val));
    }
    CHECK(worst / scale < 1e-4);
}

TEST_CASE("5D hypercylindrical mode equals its factor product") {
    ModeSpec ms;
    ms.system = System::hypercylindrical;
    ms.dim = 5;
    ms.m = 1;
    ms.q_chain = {1, 2};
    ms.k = 1.2;
    ms.K = 0.6;
    coords::HypercylindricalPoint p;
    p.dim = 5;
    p.r = 1.7;
    p.thetas = {0.9, 1.4};
    p.phi = 2.2;
    p.z = 0.8;
    const auto got = physics::mode_eval(ms, p, 0.0);
    const std::complex<double> i(0.0, 1.0);
    // sigma^2 = q1(q1+1) + (5/2 - 3/2)^2 = 3; mu = sqrt(q2(q2+1)) = sqrt(6)
    const legendre::HyperLegendreParams hp{1.0, std::sqrt(6.0), 0.5,
                                           legendre::Branch::plus};
    const auto want =
        std::pow(p.r, -1.0) * specfun::bessel_j(std::sqrt(3.0), ms.k * p.r) *
        legendre::assoc_legendre_p(2.0, 1.0, std::cos(p.thetas[1])) *
        legendre::hyper_assoc_legendre(hp, std::cos(p.thetas[0])) *
        std::exp(i * p.phi) * std::exp(i * ms.K * p.z);
    CHECK(std::abs(got - want) <= 1e-13 * std::abs(want));
}

TEST_CASE("time and longitude phases") {
    ModeSpec ms;
    ms.system = System::hyperspherical;
    ms.dim = 4;
    ms.m = 1;
    ms.q_chain = {1, 1};
    ms.k = 1.0;
    ms.omega = {2.0, -0.3};
    const auto p = hs_point(4, 2.0, {1.0, 1.2}, 0.5);
    const std::complex<double> i(0.0, 1.0);
    const auto at0 = physics::mode_eval(ms, p, 0.0);
    // default convention exp(-i omega t): one time step multiplies by it
    CHECK(std::abs(physics::mode_eval(ms, p, 0.7) -
                   at0 * std::exp(-i * ms.omega * 0.7)) < 1e-14);
    ms.time_sign = 1;
    CHECK(std::abs(physics::mode_eval(ms, p, 0.7) -
                   at0 * std::exp(i * ms.omega * 0.7)) < 1e-14);
    // phi sign flips the longitude factor
    ms.time_sign = -1;
    ms.phi_sign = -1;
    CHECK(std::abs(physics::mode_eval(ms, p, 0.0) -
                   at0 * std::exp(-2.0 * i * p.phi)) < 1e-14);
}

TEST_CASE("mode domain errors") {
    ModeSpec ms;
    ms.system = System::hyperspherical;
    ms.dim = 4;
    ms.q_chain = {1, 1};
    ms.k = 1.0;
    CHECK_THROWS_AS(physics::mode_eval(ms, hs_point(4, 0.0, {1.0, 1.0}, 0.0), 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(physics::mode_eval(ms, hs_point(4, 1.0, {0.0, 1.0}, 0.0), 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(physics::mode_eval(ms, hs_point(3, 1.0, {1.0}, 0.0), 0.0),
                    std::invalid_argument);
    ms.k = -1.0;
    CHECK_THROWS_AS(physics::mode_eval(ms, hs_point(4, 1.0, {1.0, 1.0}, 0.0), 0.0),
                    std::domain_error);
    ms.k = 1.0;
    ms.K = 0.5;  // axial wavenumber on a hyperspherical mode
    CHECK_THROWS_AS(physics::mode_eval(ms, hs_point(4, 1.0, {1.0, 1.0}, 0.0), 0.0),
                    std::invalid_argument);
}

TEST_CASE("flux law") {
    for (int n = 2; n <= 8; ++n) {
        const double k = 1.4;
        double previous = 0.0;
        for (double r : {0.5, 1.0, 2.0, 3.0}) {
            const double a = std::pow(r, 1.0 - 0.5 * n);
            // the radial prefactor satisfies A^2 r^(N-1) = r
            CHECK_THAT(a * a * std::pow(r, n - 1.0), WithinRel(r, 1e-12));
            // with the large-argument Bessel envelope the flux is constant
            const double amp = a * std::sqrt(2.0 / (specfun::pi * k * r));
            const double flux = amp * amp * std::pow(r, n - 1.0);
            if (previous != 0.0) CHECK_THAT(flux, WithinRel(previous, 1e-12));
            previous = flux;
        }
    }
}

TEST_CASE("cartesian mode") {
    const std::vector<double> kv{1.0, 0.0, 0.0};
    const std::vector<double> ph{0.0, 0.0, 0.0};
    const std::vector<double> amp{2.0, 3.0, 0.5};
    CHECK_THAT(physics::cartesian_mode(kv, ph, amp, {{0.0, 0.0, 0.0}}),
               WithinRel(3.0, 1e-15));
    // single nonzero component: a plane cosine in x_1
    CHECK_THAT(physics::cartesian_mode(kv, ph, amp, {{0.7, 9.0, -3.0}}),
               WithinRel(3.0 * std::cos(0.7), 1e-15));
    CHECK_THAT(physics::cartesian_wavenumber_sq({3.0, 4.0}),
               WithinRel(25.0, 1e-15));
    CHECK_THROWS_AS(physics::cartesian_mode(kv, ph, {1.0}, {{0.0, 0.0, 0.0}}),
                    std::invalid_argument);
}

TEST_CASE("mode spec json round trip") {
    ModeSpec ms;
    ms.system = System::hypercylindrical;
    ms.dim = 5;
    ms.m = -2;
    ms.q_chain = {1, 3};
    ms.k = 1.25;
    ms.K = -0.5;
    ms.omega = {2.0, -0.25};
    ms.bessel_kind = BesselKind::Y;
    ms.phi_sign = -1;
    ms.time_sign = 1;

    const auto j = io::to_json(ms);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("system") == "hypercylindrical");
    CHECK(j.at("q_chain") == nlohmann::json({1, 3}));
    CHECK(j.at("bessel_kind") == "Y");
    CHECK(j.at("phi_sign") == "-");

    const auto back = io::mode_from_json(j);
    CHECK(back.system == ms.system);
    CHECK(back.dim == ms.dim);
    CHECK(back.m == ms.m);
    CHECK(back.q_chain == ms.q_chain);
    CHECK(back.k == ms.k);
    CHECK(back.K == ms.K);
    CHECK(back.omega == ms.omega);
    CHECK(back.bessel_kind == ms.bessel_kind);
    CHECK(back.phi_sign == ms.phi_sign);
    CHECK(back.time_sign == ms.time_sign);
}

TEST_CASE("mode spec json validation") {
    const auto good = nlohmann::json::parse(R"({
        "schema": 1, "system": "hyperspherical", "dim": 4, "m": 0,
        "q_chain": [1, 1], "k": 1.0, "K": 0.0, "omega": [0.0, 0.0],
        "bessel_kind": "J", "phi_sign": "+", "time_sign": "-"
    })");
    CHECK_NOTHROW(io::mode_from_json(good));

    auto no_schema = good;
    no_schema.erase("schema");
    CHECK_THROWS_AS(io::mode_from_json(no_schema), std::invalid_argument);

    auto bad_sign = good;
    bad_sign["phi_sign"] = "plus";
    CHECK_THROWS_AS(io::mode_from_json(bad_sign), std::invalid_argument);

    auto axial_on_hs = good;
    axial_on_hs["K"] = 0.5;
    CHECK_THROWS_AS(io::mode_from_json(axial_on_hs), std::invalid_argument);

    auto bad_kind = good;
    bad_kind["bessel_kind"] = "H";
    CHECK_THROWS_AS(io::mode_from_json(bad_kind), std::invalid_argument);
}
