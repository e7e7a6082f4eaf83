// Command-line front end: point evaluation of the special functions and
// assembled modes, first-latitude table generation (CSV), and the
// verification suite with optional JSON reports.
//
// Exit codes: 0 success, 1 verification-check failure, 2 usage or domain
// error.

#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperharm/coords.hpp"
#include "hyperharm/legendre.hpp"
#include "hyperharm/mode_json.hpp"
#include "hyperharm/physics.hpp"
#include "hyperharm/specfun.hpp"
#include "hyperharm/suite.hpp"
#include "hyperharm/verify.hpp"

namespace {

using namespace hyperharm;

int g_exit = 0;

void print_value(double v) {
    std::cout << std::setprecision(15) << v << "\n";
}

void print_value(std::complex<double> v) {
    std::cout << std::setprecision(15) << v.real() << " " << v.imag() << "\n";
}

legendre::Branch branch_from(const std::string& s) {
    if (s == "plus" || s == "+") return legendre::Branch::plus;
    if (s == "minus" || s == "-") return legendre::Branch::minus;
    throw std::invalid_argument("branch must be 'plus' or 'minus'");
}

int sign_from(const std::string& s) {
    if (s == "+") return 1;
    if (s == "-") return -1;
    throw std::invalid_argument("sign must be '+' or '-'");
}

physics::ModeSpec mode_from_flags(const std::string& system, int dim, int m,
                                  const std::vector<int>& chain, double k,
                                  double K, const std::vector<double>& omega,
                                  const std::string& kind,
                                  const std::string& phi_sign,
                                  const std::string& time_sign,
                                  const std::string& spec_path) {
    if (!spec_path.empty()) {
        std::ifstream in(spec_path);
        if (!in)
            throw std::invalid_argument("cannot open mode spec file '" +
                                        spec_path + "'");
        nlohmann::json j;
        in >> j;
        return io::mode_from_json(j);
    }
    physics::ModeSpec ms;
    ms.system = io::system_from_name(system);
    ms.dim = dim;
    ms.m = m;
    ms.q_chain = chain;
    ms.k = k;
    ms.K = K;
    if (omega.size() == 2)
        ms.omega = {omega[0], omega[1]};
    else if (omega.size() == 1)
        ms.omega = {omega[0], 0.0};
    else if (!omega.empty())
        throw std::invalid_argument("--omega takes one or two values (re[,im])");
    if (kind != "J" && kind != "Y")
        throw std::invalid_argument("--kind must be J or Y");
    ms.bessel_kind =
        kind == "J" ? physics::BesselKind::J : physics::BesselKind::Y;
    ms.phi_sign = sign_from(phi_sign);
    ms.time_sign = sign_from(time_sign);
    return ms;
}

std::complex<double> eval_mode_at(const physics::ModeSpec& ms,
                                  const std::vector<double>& point, double t) {
    if (ms.system == physics::System::hyperspherical) {
        if (static_cast<int>(point.size()) != ms.dim)
            throw std::invalid_argument(
                "--point needs N values r,theta_1..theta_{N-2},phi");
        coords::HypersphericalPoint p;
        p.dim = ms.dim;
        p.r = point.front();
        p.thetas.assign(point.begin() + 1, point.end() - 1);
        p.phi = point.back();
        return physics::mode_eval(ms, p, t);
    }
    if (static_cast<int>(point.size()) != ms.dim)
        throw std::invalid_argument(
            "--point needs N values r,theta_1..theta_{N-3},phi,z");
    coords::HypercylindricalPoint p;
    p.dim = ms.dim;
    p.r = point.front();
    p.thetas.assign(point.begin() + 1, point.end() - 2);
    p.phi = point[point.size() - 2];
    p.z = point.back();
    return physics::mode_eval(ms, p, t);
}

void write_table(const legendre::HyperLegendreParams& base, double start,
                 double stop, int count, const std::string& out_path) {
    if (count < 2) throw std::invalid_argument("--count must be >= 2");
    auto plus = base;
    plus.branch = legendre::Branch::plus;
    auto minus = base;
    minus.branch = legendre::Branch::minus;

    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "x,value_plus,value_minus\n";
    for (int i = 0; i < count; ++i) {
        const double psi =
            start + (stop - start) * static_cast<double>(i) / (count - 1);
        const double x = std::cos(psi);
        csv << psi << "," << legendre::hyper_assoc_legendre(plus, x) << ","
            << legendre::hyper_assoc_legendre(minus, x) << "\n";
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write table to '" + out_path +
                                     "'");
        out << csv.str();
    }
}

nlohmann::json check_to_json(const suite::CheckResult& c) {
    return nlohmann::json{{"name", c.name},
                          {"pass", c.pass},
                          {"observed", c.observed},
                          {"tolerance", c.tolerance},
                          {"detail", c.detail}};
}

void emit_report(const std::string& suite_name,
                 const std::vector<suite::CheckResult>& checks, bool as_json,
                 const std::string& out_path, nlohmann::json extra = {}) {
    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;

    std::ostringstream text;
    if (as_json) {
        nlohmann::json j{{"suite", suite_name}, {"pass", all_pass}};
        auto arr = nlohmann::json::array();
        for (const auto& c : checks) arr.push_back(check_to_json(c));
        j["checks"] = arr;
        if (!extra.is_null() && !extra.empty()) j["reports"] = extra;
        text << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            text << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                 << "  (observed " << std::setprecision(3) << c.observed
                 << ", bound " << c.tolerance << ")\n";
        }
        text << (all_pass ? "all checks passed" : "CHECK FAILURE") << "\n";
    }
    if (out_path.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write report to '" + out_path +
                                     "'");
        out << text.str();
    }
    if (!all_pass) g_exit = 1;
}

// The control pair behind --erratum-check, reported as full residual
// sweeps: the uncorrected radicand must fail, the quadratic roots must pass.
std::pair<verify::ResidualReport, verify::ResidualReport> erratum_reports() {
    const legendre::HyperLegendreParams p{1.0, std::sqrt(2.0), 0.5,
                                          legendre::Branch::plus};
    const auto ode = legendre::hyper_assoc_ode_residual_form(p);
    const auto grid = suite::residual_grid();
    const auto bad = legendre::hyper_assoc_params_uncorrected(p);
    const auto good = legendre::hyper_assoc_params(p);
    auto rep_bad = verify::ode_residual(
        ode,
        [&](double th) { return legendre::hyper_assoc_eval(bad, std::cos(th)); },
        grid, 1e-3, 1e-6);
    auto rep_good = verify::ode_residual(
        ode,
        [&](double th) { return legendre::hyper_assoc_eval(good, std::cos(th)); },
        grid, 1e-3, 1e-6);
    return {rep_bad, rep_good};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hyperharm: N-dimensional hyperspherical/hypercylindrical harmonics "
        "and their verification suite"};
    app.require_subcommand(1);

    // ----- eval -----------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "evaluate one function or mode");
    eval->require_subcommand(1);

    {
        auto* c = eval->add_subcommand("hyp2f1", "Gauss hypergeometric series");
        auto alpha = std::make_shared<double>();
        auto beta = std::make_shared<double>();
        auto gamma = std::make_shared<double>();
        auto z = std::make_shared<double>();
        c->add_option("--alpha", *alpha)->required();
        c->add_option("--beta", *beta)->required();
        c->add_option("--gamma", *gamma)->required();
        c->add_option("--z", *z)->required();
        c->callback([=] { print_value(specfun::hyp2f1(*alpha, *beta, *gamma, *z)); });
    }
    {
        auto* c = eval->add_subcommand(
            "bessel", "Bessel J/Y (real order) or spherical j/y (--q)");
        auto kind = std::make_shared<std::string>("J");
        auto sigma = std::make_shared<double>(0.0);
        auto q = std::make_shared<int>(-1);
        auto x = std::make_shared<double>();
        c->add_option("--kind", *kind, "J, Y, j or y")->required();
        c->add_option("--sigma", *sigma, "real order (kinds J, Y)");
        c->add_option("--q", *q, "integer index (kinds j, y)");
        c->add_option("--x", *x)->required();
        c->callback([=] {
            if (*kind == "J")
                print_value(specfun::bessel_j(*sigma, *x));
            else if (*kind == "Y")
                print_value(specfun::bessel_y(*sigma, *x));
            else if (*kind == "j")
                print_value(specfun::spherical_bessel(specfun::SphericalKind::j,
                                                      *q, *x));
            else if (*kind == "y")
                print_value(specfun::spherical_bessel(specfun::SphericalKind::y,
                                                      *q, *x));
            else
                throw std::invalid_argument("--kind must be one of J, Y, j, y");
        });
    }
    {
        auto* c = eval->add_subcommand("legendre", "Legendre function P_nu");
        auto nu = std::make_shared<double>();
        auto x = std::make_shared<double>();
        c->add_option("--nu", *nu)->required();
        c->add_option("--x", *x)->required();
        c->callback([=] { print_value(legendre::legendre_p(*nu, *x)); });
    }
    {
        auto* c = eval->add_subcommand("assoc",
                                       "associated Legendre function P_nu^mu");
        auto nu = std::make_shared<double>();
        auto mu = std::make_shared<double>();
        auto x = std::make_shared<double>();
        c->add_option("--nu", *nu)->required();
        c->add_option("--mu", *mu)->required();
        c->add_option("--x", *x)->required();
        c->callback([=] { print_value(legendre::assoc_legendre_p(*nu, *mu, *x)); });
    }
    {
        auto* c = eval->add_subcommand(
            "hyper", "hyperspherical Legendre function P_{nu,lambda}");
        auto nu = std::make_shared<double>();
        auto lambda = std::make_shared<double>();
        auto x = std::make_shared<double>();
        c->add_option("--nu", *nu)->required();
        c->add_option("--lambda", *lambda)->required();
        c->add_option("--x", *x)->required();
        c->callback([=] { print_value(legendre::hyper_legendre(*nu, *lambda, *x)); });
    }
    {
        auto* c = eval->add_subcommand(
            "hyper-assoc",
            "hyperspherical associated Legendre function P^mu_{nu,lambda}");
        auto nu = std::make_shared<double>();
        auto mu = std::make_shared<double>();
        auto lambda = std::make_shared<double>();
        auto branch = std::make_shared<std::string>("plus");
        auto x = std::make_shared<double>();
        c->add_option("--nu", *nu)->required();
        c->add_option("--mu", *mu)->required();
        c->add_option("--lambda", *lambda)->required();
        c->add_option("--branch", *branch, "plus or minus");
        c->add_option("--x", *x)->required();
        c->callback([=] {
            const legendre::HyperLegendreParams p{*nu, *mu, *lambda,
                                                  branch_from(*branch)};
            print_value(legendre::hyper_assoc_legendre(p, *x));
        });
    }
    {
        auto* c = eval->add_subcommand("mode", "assembled separated mode");
        auto system = std::make_shared<std::string>("hs");
        auto dim = std::make_shared<int>(3);
        auto m = std::make_shared<int>(0);
        auto chain = std::make_shared<std::vector<int>>();
        auto k = std::make_shared<double>(1.0);
        auto K = std::make_shared<double>(0.0);
        auto omega = std::make_shared<std::vector<double>>();
        auto kind = std::make_shared<std::string>("J");
        auto phi_sign = std::make_shared<std::string>("+");
        auto time_sign = std::make_shared<std::string>("-");
        auto point = std::make_shared<std::vector<double>>();
        auto tval = std::make_shared<double>(0.0);
        auto spec_path = std::make_shared<std::string>();
        c->add_option("--system", *system, "hs or hc");
        c->add_option("--dim", *dim);
        c->add_option("--m", *m);
        c->add_option("--chain", *chain, "q_1,q_2,...")->delimiter(',');
        c->add_option("--k", *k, "radial wavenumber");
        c->add_option("--K", *K, "axial wavenumber (hc)");
        c->add_option("--omega", *omega, "re[,im]")->delimiter(',');
        c->add_option("--kind", *kind, "J or Y");
        c->add_option("--phi-sign", *phi_sign);
        c->add_option("--time-sign", *time_sign);
        c->add_option("--point", *point,
                      "r,theta_1..,phi (hs) or r,theta_1..,phi,z (hc)")
            ->delimiter(',')
            ->required();
        c->add_option("--t", *tval, "time");
        c->add_option("--spec", *spec_path, "ModeSpec JSON file (overrides flags)");
        c->callback([=] {
            const auto ms =
                mode_from_flags(*system, *dim, *m, *chain, *k, *K, *omega,
                                *kind, *phi_sign, *time_sign, *spec_path);
            print_value(eval_mode_at(ms, *point, *tval));
        });
    }

    // ----- table ----------------------------------------------------------
    {
        auto* c = app.add_subcommand(
            "table",
            "CSV table of a first-latitude function, both branches");
        auto preset = std::make_shared<std::string>();
        auto q = std::make_shared<int>(1);
        auto s = std::make_shared<int>(1);
        auto nu = std::make_shared<double>(std::nan(""));
        auto mu = std::make_shared<double>(std::nan(""));
        auto lambda = std::make_shared<double>(0.5);
        auto start = std::make_shared<double>(0.3);
        auto stop = std::make_shared<double>(coords::pi - 0.3);
        auto count = std::make_shared<int>(200);
        auto out = std::make_shared<std::string>();
        c->add_option("--preset", *preset, "fig0 (uses --q, --s)");
        c->add_option("--q", *q, "first-latitude degree (preset)");
        c->add_option("--s", *s, "next chain entry (preset)");
        c->add_option("--nu", *nu);
        c->add_option("--mu", *mu);
        c->add_option("--lambda", *lambda);
        c->add_option("--start", *start, "first latitude value");
        c->add_option("--stop", *stop, "last latitude value");
        c->add_option("--count", *count, "sample count (>= 2)");
        c->add_option("--out", *out, "output path (default stdout)");
        c->callback([=] {
            legendre::HyperLegendreParams p{};
            if (*preset == "fig0") {
                if (*q < 1 || *s < 1)
                    throw std::invalid_argument(
                        "fig0 preset needs --q >= 1 and --s >= 1");
                p = {static_cast<double>(*q),
                     std::sqrt(*s * (*s + 1.0)), 0.5,
                     legendre::Branch::plus};
            } else if (!preset->empty()) {
                throw std::invalid_argument("unknown preset '" + *preset + "'");
            } else {
                if (std::isnan(*nu) || std::isnan(*mu))
                    throw std::invalid_argument(
                        "table needs either --preset fig0 or --nu/--mu");
                p = {*nu, *mu, *lambda, legendre::Branch::plus};
            }
            write_table(p, *start, *stop, *count, *out);
        });
    }

    // ----- verify ---------------------------------------------------------
    {
        auto* c = app.add_subcommand("verify", "run the verification suite");
        auto which = std::make_shared<std::string>("all");
        auto as_json = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        auto dims = std::make_shared<std::string>();
        auto erratum = std::make_shared<bool>(false);
        c->add_option("suite", *which, "coords|specfun|legendre|physics|all");
        c->add_flag("--json", *as_json, "machine-readable report");
        c->add_option("--out", *out, "output path (default stdout)");
        c->add_option("--dims", *dims, "coords dimension range lo..hi");
        c->add_flag("--erratum-check", *erratum,
                    "legendre: report only the parameter control pair");
        c->callback([=] {
            int dim_lo = 2, dim_hi = 8;
            if (!dims->empty()) {
                const auto sep = dims->find("..");
                if (sep == std::string::npos)
                    throw std::invalid_argument("--dims expects lo..hi");
                dim_lo = std::stoi(dims->substr(0, sep));
                dim_hi = std::stoi(dims->substr(sep + 2));
                if (dim_lo < 2 || dim_hi < dim_lo)
                    throw std::invalid_argument("--dims range is invalid");
            }
            std::vector<suite::CheckResult> checks;
            nlohmann::json extra;
            if (*erratum) {
                if (*which != "legendre")
                    throw std::invalid_argument(
                        "--erratum-check applies to the legendre suite");
                checks = suite::check_parameter_controls();
                const auto [bad, good] = erratum_reports();
                extra = nlohmann::json{{"uncorrected", io::to_json(bad)},
                                       {"corrected", io::to_json(good)}};
            } else if (*which == "coords") {
                checks = suite::coords_suite(dim_lo, dim_hi);
            } else if (*which == "specfun") {
                checks = suite::specfun_suite();
            } else if (*which == "legendre") {
                checks = suite::legendre_suite();
            } else if (*which == "physics") {
                checks = suite::physics_suite();
            } else if (*which == "all") {
                checks = suite::all_suites();
            } else {
                throw std::invalid_argument("unknown suite '" + *which + "'");
            }
            emit_report(*which, checks, *as_json, *out, extra);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
