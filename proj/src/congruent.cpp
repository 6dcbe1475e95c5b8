#include "qf/congruent.hpp"

namespace qf {

namespace {

MultiPoly var_a() { return MultiPoly::variable("a"); }
MultiPoly var_b() { return MultiPoly::variable("b"); }

CertificatePolys make_family_i() {
    MultiPoly a = var_a(), b = var_b();
    MultiPoly a4 = a.pow(4), b4 = b.pow(4);
    CertificatePolys f;
    f.n = a4 + MultiPoly(4) * b4;
    f.x = a.pow(8) + MultiPoly(24) * a4 * b4 + MultiPoly(16) * b.pow(8);
    f.y = MultiPoly(4) * a * b * (MultiPoly(4) * b4 - a4);
    f.z = a.pow(8) + MultiPoly(32) * a.pow(2) * b.pow(6) - MultiPoly(8) * a4 * b4 +
          MultiPoly(8) * a.pow(6) * b.pow(2) + MultiPoly(16) * b.pow(8);
    f.t = a.pow(8) - MultiPoly(32) * a.pow(2) * b.pow(6) - MultiPoly(8) * a4 * b4 -
          MultiPoly(8) * a.pow(6) * b.pow(2) + MultiPoly(16) * b.pow(8);
    return f;
}

CertificatePolys make_family_ii() {
    MultiPoly a = var_a(), b = var_b();
    MultiPoly a4 = a.pow(4), b4 = b.pow(4);
    CertificatePolys f;
    f.n = MultiPoly(2) * a4 + MultiPoly(2) * b4;
    f.x = a.pow(8) + MultiPoly(6) * a4 * b4 + b.pow(8);
    // y = 2ab(b^4 - a^4); the printed 2ab(4b^4-a^4) fails the certificate
    // equations (e.g. at (1,2): 208 is not a square).
    f.y = MultiPoly(2) * a * b * (b4 - a4);
    f.z = a.pow(8) + MultiPoly(4) * a.pow(2) * b.pow(6) - MultiPoly(2) * a4 * b4 +
          MultiPoly(4) * a.pow(6) * b.pow(2) + b.pow(8);
    f.t = a.pow(8) - MultiPoly(4) * a.pow(2) * b.pow(6) - MultiPoly(2) * a4 * b4 -
          MultiPoly(4) * a.pow(6) * b.pow(2) + b.pow(8);
    return f;
}

CertificatePolys make_family_iii() {
    MultiPoly a = var_a(), b = var_b();
    MultiPoly a4 = a.pow(4), b4 = b.pow(4);
    MultiPoly b2 = b.pow(2), a2 = a.pow(2);
    CertificatePolys f;
    f.n = a4 - b4;
    f.x = b2 * (a4 + b4);
    f.y = MultiPoly(2) * a * b.pow(3);
    // z, t carry a b^2 prefix matching x = b^2(a^4+b^4); the printed b^4
    // forms are dimensionally inconsistent and fail at (2,1).
    f.z = b2 * (a4 + MultiPoly(2) * a2 * b2 - b4);
    f.t = b2 * (a4 - MultiPoly(2) * a2 * b2 - b4);
    return f;
}

Rational eval_ab(const MultiPoly& p, const Rational& a, const Rational& b) {
    return p.eval_at({{"a", a}, {"b", b}});
}

} // namespace

const CertificatePolys& family_polys(FamilyShape shape) {
    static const CertificatePolys fam_i = make_family_i();
    static const CertificatePolys fam_ii = make_family_ii();
    static const CertificatePolys fam_iii = make_family_iii();
    switch (shape) {
    case FamilyShape::I: return fam_i;
    case FamilyShape::II: return fam_ii;
    case FamilyShape::III: return fam_iii;
    }
    throw DomainError("unknown family shape");
}

Rational family_value(FamilyShape shape, const Rational& a, const Rational& b) {
    switch (shape) {
    case FamilyShape::I: return pow4(a) + Rational(4) * pow4(b);
    case FamilyShape::II: return Rational(2) * pow4(a) + Rational(2) * pow4(b);
    case FamilyShape::III: return pow4(a) - pow4(b);
    }
    throw DomainError("unknown family shape");
}

CongruentCertificate::CongruentCertificate(Integer n, Integer x, Integer y, Integer z,
                                           Integer t)
    : n_(std::move(n)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)),
      t_(std::move(t)) {
    if (n_ <= 0) {
        throw InvalidCertificate("certificate requires n >= 1");
    }
    if (x_ == 0 || y_ == 0 || z_ == 0 || t_ == 0) {
        throw InvalidCertificate("certificate entries must be nonzero");
    }
    Integer x2 = x_ * x_;
    Integer ny2 = n_ * y_ * y_;
    if (x2 + ny2 != z_ * z_ || x2 - ny2 != t_ * t_) {
        throw InvalidCertificate("certificate equations x^2 +- n*y^2 = z^2, t^2 fail");
    }
}

namespace {

CongruentCertificate cert_from_polys(FamilyShape shape, const Integer& a, const Integer& b) {
    const auto& f = family_polys(shape);
    Rational ra(a), rb(b);
    // Signs are irrelevant downstream (only squares and fourth powers are
    // consumed); store absolute values.
    Integer n = rat_num(eval_ab(f.n, ra, rb));
    Integer x = abs(rat_num(eval_ab(f.x, ra, rb)));
    Integer y = abs(rat_num(eval_ab(f.y, ra, rb)));
    Integer z = abs(rat_num(eval_ab(f.z, ra, rb)));
    Integer t = abs(rat_num(eval_ab(f.t, ra, rb)));
    return CongruentCertificate(n, x, y, z, t);
}

} // namespace

CongruentCertificate family_i(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1) {
        throw DegenerateParameters("family i requires a, b >= 1");
    }
    return cert_from_polys(FamilyShape::I, a, b);
}

CongruentCertificate family_ii(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1) {
        throw DegenerateParameters("family ii requires a, b >= 1");
    }
    if (a == b) {
        throw DegenerateParameters("family ii requires a != b (else y = 0)");
    }
    return cert_from_polys(FamilyShape::II, a, b);
}

CongruentCertificate family_iii(const Integer& a, const Integer& b) {
    if (b < 1 || a <= b) {
        throw DegenerateParameters("family iii requires a > b >= 1");
    }
    return cert_from_polys(FamilyShape::III, a, b);
}

RationalCertificate family_at(FamilyShape shape, const Rational& a, const Rational& b) {
    const auto& f = family_polys(shape);
    RationalCertificate c;
    c.n = eval_ab(f.n, a, b);
    c.x = eval_ab(f.x, a, b);
    c.y = eval_ab(f.y, a, b);
    c.z = eval_ab(f.z, a, b);
    c.t = eval_ab(f.t, a, b);
    if (c.y == 0 || c.x == 0 || c.z == 0 || c.t == 0) {
        throw DegenerateParameters("family evaluation has a zero certificate entry");
    }
    return c;
}

QuarticSquareTriple::QuarticSquareTriple(Integer n, Integer X, Integer Y, Integer K)
    : n_(std::move(n)), X_(std::move(X)), Y_(std::move(Y)), K_(std::move(K)) {
    if (n_ <= 0) {
        throw InvalidCertificate("quartic-square triple requires n >= 1");
    }
    if (X_ == 0 || Y_ == 0 || K_ == 0) {
        throw InvalidCertificate("quartic-square triple entries must be nonzero");
    }
    Integer x4 = X_ * X_ * X_ * X_;
    Integer y4 = Y_ * Y_ * Y_ * Y_;
    if (x4 - n_ * n_ * y4 != K_ * K_) {
        throw InvalidCertificate("quartic-square relation X^4 - n^2*Y^4 = K^2 fails");
    }
}

QuarticSquareTriple cert_to_quartic(const CongruentCertificate& c) {
    return QuarticSquareTriple(c.n(), c.x(), c.y(), abs(c.z() * c.t()));
}

std::pair<Curve, CurvePoint> cert_to_ec_point(const CongruentCertificate& c) {
    Rational x(c.x()), y(c.y());
    Rational u = (x / y) * (x / y);
    Rational v = x * Rational(c.z()) * Rational(c.t()) / (y * y * y);
    Curve curve(c.n());
    CurvePoint p(u, v);
    if (!is_on_curve(curve, p)) {
        throw InvalidCertificate("cert_to_ec_point: image not on curve"); // unreachable
    }
    return {curve, p};
}

std::pair<Rational, Rational> cert_to_uv(const RationalCertificate& c) {
    Rational u = (c.x / c.y) * (c.x / c.y);
    Rational v = c.x * c.z * c.t / (c.y * c.y * c.y);
    return {u, v};
}

} // namespace qf
