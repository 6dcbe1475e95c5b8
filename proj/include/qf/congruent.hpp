#pragma once

#include <utility>

#include "qf/elliptic.hpp"
#include "qf/exactnum.hpp"
#include "qf/multipoly.hpp"

namespace qf {

/// The three congruent-number families: f(a,b) = a^4+4b^4, 2a^4+2b^4, a^4-b^4.
enum class FamilyShape { I, II, III };

/// Value of the family form at (a, b).
Rational family_value(FamilyShape shape, const Rational& a, const Rational& b);

/// Certificate entry formulas as polynomials in the parameters "a", "b".
/// The squared relations z^2 = x^2 + n*y^2 and t^2 = x^2 - n*y^2 hold
/// identically for every shape.
struct CertificatePolys {
    MultiPoly n, x, y, z, t;
};
const CertificatePolys& family_polys(FamilyShape shape);

/// Witness (n, x, y, z, t) with x^2 + n*y^2 = z^2 and x^2 - n*y^2 = t^2,
/// all entries positive integers. Validated on construction.
class CongruentCertificate {
public:
    CongruentCertificate(Integer n, Integer x, Integer y, Integer z, Integer t);

    const Integer& n() const { return n_; }
    const Integer& x() const { return x_; }
    const Integer& y() const { return y_; }
    const Integer& z() const { return z_; }
    const Integer& t() const { return t_; }

    bool operator==(const CongruentCertificate& o) const = default;

private:
    Integer n_, x_, y_, z_, t_;
};

/// Same relations over the rationals; carries family evaluations at rational
/// parameters for the chain constructions.
struct RationalCertificate {
    Rational n, x, y, z, t;
};

CongruentCertificate family_i(const Integer& a, const Integer& b);
CongruentCertificate family_ii(const Integer& a, const Integer& b);
CongruentCertificate family_iii(const Integer& a, const Integer& b);

/// Family evaluation at rational parameters, validated; throws
/// DegenerateParameters when y or any other entry vanishes.
RationalCertificate family_at(FamilyShape shape, const Rational& a, const Rational& b);

/// (n, X, Y, K) with X^4 - n^2*Y^4 = K^2. Validated on construction.
class QuarticSquareTriple {
public:
    QuarticSquareTriple(Integer n, Integer X, Integer Y, Integer K);

    const Integer& n() const { return n_; }
    const Integer& X() const { return X_; }
    const Integer& Y() const { return Y_; }
    const Integer& K() const { return K_; }

    bool operator==(const QuarticSquareTriple& o) const = default;

private:
    Integer n_, X_, Y_, K_;
};

/// (X, Y, K) = (x, y, |z*t|): multiplying the certificate equations gives
/// x^4 - n^2*y^4 = (z*t)^2.
QuarticSquareTriple cert_to_quartic(const CongruentCertificate& c);

/// U = (x/y)^2, V = x*z*t/y^3 lies on v^2 = u^3 - n^2*u.
std::pair<Curve, CurvePoint> cert_to_ec_point(const CongruentCertificate& c);

/// Same map for rational certificates; returns (u, v) only.
std::pair<Rational, Rational> cert_to_uv(const RationalCertificate& c);

} // namespace qf
