#include "qf/json_io.hpp"

namespace qf {

Json to_json(const MultiPoly& p) {
    Json arr = Json::array();
    for (const auto& [coeff, mono] : p.terms()) {
        Json exps = Json::object();
        for (const auto& [var, e] : mono) {
            exps[var] = e;
        }
        arr.push_back(Json::array({to_string(coeff), exps}));
    }
    return arr;
}

MultiPoly multipoly_from_json(const Json& j) {
    if (!j.is_array()) {
        throw DomainError("polynomial JSON must be an array of terms");
    }
    std::vector<std::pair<Rational, std::map<std::string, std::uint32_t>>> terms;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) {
            throw DomainError("polynomial term must be [coefficient, exponents]");
        }
        Rational coeff = parse_rational(term[0].get<std::string>());
        std::map<std::string, std::uint32_t> mono;
        for (const auto& [var, e] : term[1].items()) {
            mono[var] = e.get<std::uint32_t>();
        }
        terms.emplace_back(coeff, std::move(mono));
    }
    return MultiPoly::from_terms(terms);
}

Json to_json(const RatFunc& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RatFunc ratfunc_from_json(const Json& j) {
    return RatFunc(multipoly_from_json(j.at("num")), multipoly_from_json(j.at("den")));
}

Json to_json(const CongruentCertificate& c) {
    return Json{{"n", to_string(c.n())},
                {"x", to_string(c.x())},
                {"y", to_string(c.y())},
                {"z", to_string(c.z())},
                {"t", to_string(c.t())}};
}

CongruentCertificate certificate_from_json(const Json& j) {
    return CongruentCertificate(parse_integer(j.at("n").get<std::string>()),
                                parse_integer(j.at("x").get<std::string>()),
                                parse_integer(j.at("y").get<std::string>()),
                                parse_integer(j.at("z").get<std::string>()),
                                parse_integer(j.at("t").get<std::string>()));
}

Json to_json(const QuarticSquareTriple& q) {
    return Json{{"n", to_string(q.n())},
                {"X", to_string(q.X())},
                {"Y", to_string(q.Y())},
                {"K", to_string(q.K())}};
}

Json to_json(const Curve& c) { return Json{{"n", to_string(c.n())}}; }

Json to_json(const CurvePoint& p) {
    if (p.is_infinity()) {
        return Json{{"infinity", true}};
    }
    return Json{{"u", to_string(p.u())}, {"v", to_string(p.v())}};
}

CurvePoint point_from_json(const Json& j) {
    if (j.contains("infinity") && j.at("infinity").get<bool>()) {
        return CurvePoint::infinity();
    }
    return CurvePoint(parse_rational(j.at("u").get<std::string>()),
                      parse_rational(j.at("v").get<std::string>()));
}

Json to_json(const SurfaceSolution& s) {
    Json out;
    out["surface"] = surface_name(s.id());
    out[s.id() == SurfaceId::Lemma28 ? "s" : "n"] = to_string(s.param());
    out["coords"] = to_json(s.coords());
    return out;
}

Json to_json(const DiagonalForm& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return Json{{"coeffs", coeffs}, {"vars", f.vars()}};
}

DiagonalForm form_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    return DiagonalForm(std::move(coeffs), std::move(vars));
}

Json to_json(const ParametricSolution& ps) {
    Json coords = Json::array();
    for (const auto& c : ps.coords()) {
        coords.push_back(to_json(c));
    }
    return Json{{"params", ps.params()}, {"coords", coords}};
}

ParametricSolution parametric_from_json(const Json& j) {
    std::vector<std::string> params = j.at("params").get<std::vector<std::string>>();
    std::vector<RatFunc> coords;
    for (const auto& c : j.at("coords")) {
        coords.push_back(ratfunc_from_json(c));
    }
    return ParametricSolution(std::move(params), std::move(coords));
}

Json to_json(const SplittingIdentity& s) {
    Json terms = Json::array();
    for (const auto& [c, g] : s.terms) {
        terms.push_back(Json{{"coeff", to_string(c)}, {"g", to_json(g)}});
    }
    return Json{{"n_poly", to_json(s.n_poly)}, {"terms", terms}};
}

std::string family_shape_name(FamilyShape s) {
    switch (s) {
    case FamilyShape::I: return "x4+4y4";
    case FamilyShape::II: return "2x4+2y4";
    case FamilyShape::III: return "x4-y4";
    }
    throw DomainError("unknown family shape");
}

FamilyShape family_shape_from_string(const std::string& s) {
    if (s == "x4+4y4" || s == "i") {
        return FamilyShape::I;
    }
    if (s == "2x4+2y4" || s == "ii") {
        return FamilyShape::II;
    }
    if (s == "x4-y4" || s == "iii") {
        return FamilyShape::III;
    }
    throw DomainError("unknown family shape '" + s + "'");
}

std::string phi_shape_name(PhiShape s) {
    return s == PhiShape::MinusTwoZ4 ? "2z4" : "z4";
}

PhiShape phi_shape_from_string(const std::string& s) {
    if (s == "2z4") {
        return PhiShape::MinusTwoZ4;
    }
    if (s == "z4") {
        return PhiShape::MinusZ4;
    }
    throw DomainError("unknown phi shape '" + s + "' (expected 2z4 or z4)");
}

Json to_json(const FChain& fc) {
    Json blocks = Json::array();
    for (const auto& b : fc.blocks()) {
        blocks.push_back(Json{{"f", family_shape_name(b.shape)},
                              {"args", Json::array({to_string(b.arg1), to_string(b.arg2)})}});
    }
    return Json{{"common_value", to_string(fc.common_value())}, {"blocks", blocks}};
}

Json to_json(const PhiChain& pc) {
    Json blocks = Json::array();
    for (const auto& b : pc.blocks()) {
        Json coords = Json::array();
        for (const auto& c : b.coords) {
            coords.push_back(to_string(c));
        }
        blocks.push_back(Json{{"phi", phi_shape_name(b.shape)}, {"coords", coords}});
    }
    return Json{{"common_value", to_string(pc.common_value())}, {"blocks", blocks}};
}

Json to_json(const VerificationReport& r) {
    Json out;
    out["form"] = to_json(r.form);
    out["mode"] = r.mode == VerifyMode::Numeric ? "numeric" : "symbolic";
    out["outcome"] = r.pass ? "pass" : "fail";
    if (r.residual_value) {
        out["residual"] = to_string(*r.residual_value);
    }
    if (r.residual_poly) {
        out["residual_poly"] = to_json(*r.residual_poly);
    }
    Json coords = Json::array();
    for (const auto& f : r.coordinates) {
        Json entry{{"index", f.index}};
        if (r.mode == VerifyMode::Numeric) {
            entry["zero_at_point"] = f.zero_at_point;
        } else {
            entry["identically_zero"] = f.identically_zero;
            if (f.vanishing_locus) {
                entry["vanishing_locus"] = to_json(*f.vanishing_locus);
            }
        }
        coords.push_back(std::move(entry));
    }
    out["coordinates"] = std::move(coords);
    return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) {
        throw DomainError("expected a JSON array of rational strings");
    }
    std::vector<Rational> out;
    for (const auto& x : j) {
        out.push_back(parse_rational(x.get<std::string>()));
    }
    return out;
}

} // namespace qf
