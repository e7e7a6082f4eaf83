#pragma once

// JSON round trip for ModeSpec and ResidualReport. The ModeSpec document is
// versioned with a "schema": 1 key and uses the field names
//   system, dim, m, q_chain, k, K, omega, bessel_kind, phi_sign, time_sign
// with "system" one of "hyperspherical" / "hypercylindrical", "omega" a
// [re, im] pair, "bessel_kind" "J" / "Y" and the signs "+" / "-".

#include <complex>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "physics.hpp"
#include "verify.hpp"

namespace hyperharm::io {

inline constexpr int mode_schema_version = 1;

inline std::string system_name(physics::System s) {
    return s == physics::System::hyperspherical ? "hyperspherical"
                                                : "hypercylindrical";
}

inline physics::System system_from_name(const std::string& s) {
    if (s == "hyperspherical" || s == "hs")
        return physics::System::hyperspherical;
    if (s == "hypercylindrical" || s == "hc")
        return physics::System::hypercylindrical;
    throw std::invalid_argument("unknown coordinate system '" + s + "'");
}

inline nlohmann::json to_json(const physics::ModeSpec& ms) {
    return nlohmann::json{
        {"schema", mode_schema_version},
        {"system", system_name(ms.system)},
        {"dim", ms.dim},
        {"m", ms.m},
        {"q_chain", ms.q_chain},
        {"k", ms.k},
        {"K", ms.K},
        {"omega", {ms.omega.real(), ms.omega.imag()}},
        {"bessel_kind", ms.bessel_kind == physics::BesselKind::J ? "J" : "Y"},
        {"phi_sign", ms.phi_sign > 0 ? "+" : "-"},
        {"time_sign", ms.time_sign > 0 ? "+" : "-"},
    };
}

inline int sign_from_json(const nlohmann::json& j, const char* field) {
    const std::string s = j.at(field).get<std::string>();
    if (s == "+") return 1;
    if (s == "-") return -1;
    throw std::invalid_argument(std::string("ModeSpec field '") + field +
                                "' must be \"+\" or \"-\"");
}

inline physics::ModeSpec mode_from_json(const nlohmann::json& j) {
    if (!j.contains("schema") || j.at("schema").get<int>() != mode_schema_version)
        throw std::invalid_argument("ModeSpec document: expected schema 1");
    physics::ModeSpec ms;
    ms.system = system_from_name(j.at("system").get<std::string>());
    ms.dim = j.at("dim").get<int>();
    ms.m = j.at("m").get<int>();
    ms.q_chain = j.at("q_chain").get<std::vector<int>>();
    ms.k = j.at("k").get<double>();
    ms.K = j.value("K", 0.0);
    if (j.contains("omega")) {
        const auto& w = j.at("omega");
        ms.omega = {w.at(0).get<double>(), w.at(1).get<double>()};
    }
    const std::string kind = j.value("bessel_kind", std::string("J"));
    if (kind != "J" && kind != "Y")
        throw std::invalid_argument("ModeSpec: bessel_kind must be J or Y");
    ms.bessel_kind =
        kind == "J" ? physics::BesselKind::J : physics::BesselKind::Y;
    if (j.contains("phi_sign")) ms.phi_sign = sign_from_json(j, "phi_sign");
    if (j.contains("time_sign")) ms.time_sign = sign_from_json(j, "time_sign");
    if (ms.system == physics::System::hyperspherical && ms.K != 0.0)
        throw std::invalid_argument(
            "ModeSpec: axial wavenumber K applies to hypercylindrical modes "
            "only");
    return ms;
}

inline nlohmann::json to_json(const verify::ResidualReport& rep) {
    return nlohmann::json{
        {"grid", rep.grid},
        {"step", rep.step},
        {"max_residual", rep.max_residual},
        {"mean_residual", rep.mean_residual},
        {"scale", rep.scale},
        {"tolerance", rep.tolerance},
        {"pass", rep.pass},
    };
}

}  // namespace hyperharm::io
