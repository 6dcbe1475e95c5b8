#pragma once

#include <json.hpp>

#include "qf/chains.hpp"
#include "qf/congruent.hpp"
#include "qf/elliptic.hpp"
#include "qf/surfaces.hpp"
#include "qf/varieties.hpp"
#include "qf/verify.hpp"

namespace qf {

// All numbers are serialized as decimal strings ("p/q" for rationals) so
// arbitrary precision survives every JSON parser. ordered_json keeps field
// order deterministic byte-for-byte.
using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& n) { return to_string(n); }
inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const auto& x : v) {
        arr.push_back(to_string(x));
    }
    return arr;
}

inline Json to_json(const std::vector<Integer>& v) {
    Json arr = Json::array();
    for (const auto& x : v) {
        arr.push_back(to_string(x));
    }
    return arr;
}

/// Polynomial as a sorted list of [coefficient-string, exponent-object],
/// e.g. ["24", {"a":4,"b":4}]; term order is the canonical graded-lex order.
Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

Json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

Json to_json(const CongruentCertificate& c);
CongruentCertificate certificate_from_json(const Json& j);

Json to_json(const QuarticSquareTriple& q);

Json to_json(const Curve& c);
Json to_json(const CurvePoint& p);
CurvePoint point_from_json(const Json& j);

Json to_json(const SurfaceSolution& s);

Json to_json(const DiagonalForm& f);
DiagonalForm form_from_json(const Json& j);

Json to_json(const ParametricSolution& ps);
ParametricSolution parametric_from_json(const Json& j);

Json to_json(const SplittingIdentity& s);

Json to_json(const FChain& fc);
Json to_json(const PhiChain& pc);
PhiShape phi_shape_from_string(const std::string& s);
std::string phi_shape_name(PhiShape s);
std::string family_shape_name(FamilyShape s);
FamilyShape family_shape_from_string(const std::string& s);

Json to_json(const VerificationReport& r);

std::vector<Rational> rationals_from_json(const Json& j);

} // namespace qf
