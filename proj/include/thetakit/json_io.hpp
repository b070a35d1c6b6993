#ifndef THETAKIT_JSON_IO_HPP
#define THETAKIT_JSON_IO_HPP

#include "thetakit/verifier.hpp"

#include <json.hpp>

namespace thetakit {

using nlohmann::json;

inline json to_json(const GradedPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exps = json::array();
        for (unsigned x : e) exps.push_back(x);
        terms.push_back({{"coeff", rat_to_string(c)}, {"exps", exps}});
    }
    json weight;
    const Weight w = p.weight();
    switch (w.kind) {
        case Weight::Zero: weight = "zero"; break;
        case Weight::Mixed: weight = "mixed"; break;
        case Weight::Uniform: weight = w.value; break;
    }
    return {{"generators", {"P", "Q", "R", "P2", "Q2", "R2"}},
            {"terms", terms},
            {"weight", weight}};
}

inline GradedPoly poly_from_json(const json& j) {
    GradedPoly p;
    for (const auto& t : j.at("terms")) {
        Exponents e{};
        const auto& exps = t.at("exps");
        if (exps.size() != 6) throw std::invalid_argument("poly term needs 6 exponents");
        for (int i = 0; i < 6; ++i) e[i] = exps[i].get<unsigned>();
        p.add_term(e, rat_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

inline json to_json(const QSeries& s) {
    json coeffs = json::object();
    for (const auto& [e, c] : s.coeffs()) coeffs[std::to_string(e)] = rat_to_string(c);
    return {{"denom", s.denom()}, {"trunc", s.trunc()}, {"coeffs", coeffs}};
}

inline QSeries qseries_from_json(const json& j) {
    QSeries s(j.at("denom").get<unsigned>(), j.at("trunc").get<QSeries::Index>());
    for (const auto& [key, val] : j.at("coeffs").items())
        s.set_coeff(std::stoll(key), rat_from_string(val.get<std::string>()));
    return s;
}

inline json to_json(const Theta1ClosedForm& f) {
    return {{"kind", "theta1"},
            {"nu", f.nu},
            {"sign", f.sign_factor},
            {"prefactor", "eta^3"},
            {"poly", to_json(f.coeff_poly)}};
}

inline json to_json(const Theta4ClosedForm& f) {
    return {{"kind", "theta4"},
            {"nu", f.nu},
            {"prefactor", "theta4_at_0"},
            {"poly", to_json(f.ratio_poly)}};
}

inline json to_json(const VerificationReport& r) {
    json mismatch = nullptr;
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        mismatch = {{"exponent", std::to_string(m.index) + "/" + std::to_string(m.denom)},
                    {"lhs", rat_to_string(m.lhs)},
                    {"rhs", rat_to_string(m.rhs)}};
    }
    return {{"target", to_string(r.target)},
            {"order", r.order},
            {"window", r.window},
            {"verdict", r.match() ? "match" : "mismatch"},
            {"first_mismatch", mismatch}};
}

}  // namespace thetakit

#endif  // THETAKIT_JSON_IO_HPP
