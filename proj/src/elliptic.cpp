#include "qf/elliptic.hpp"

namespace qf {

Curve::Curve(Integer n) : n_(std::move(n)) {
    if (n_ == 0) {
        throw DomainError("curve parameter n must be nonzero");
    }
}

Rational Curve::rhs(const Rational& u) const {
    Rational n2(n_ * n_);
    return u * u * u - n2 * u;
}

CurvePoint CurvePoint::infinity() { return CurvePoint(); }

CurvePoint::CurvePoint(Rational u, Rational v)
    : infinity_(false), u_(std::move(u)), v_(std::move(v)) {}

const Rational& CurvePoint::u() const {
    if (infinity_) {
        throw DomainError("coordinate access on the point at infinity");
    }
    return u_;
}

const Rational& CurvePoint::v() const {
    if (infinity_) {
        throw DomainError("coordinate access on the point at infinity");
    }
    return v_;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (infinity_ || o.infinity_) {
        return infinity_ == o.infinity_;
    }
    return u_ == o.u_ && v_ == o.v_;
}

bool is_on_curve(const Curve& c, const CurvePoint& p) {
    if (p.is_infinity()) {
        return true;
    }
    return p.v() * p.v() == c.rhs(p.u());
}

namespace {

void require_on_curve(const Curve& c, const CurvePoint& p, const char* op) {
    if (!is_on_curve(c, p)) {
        throw DomainError(std::string(op) + ": point is not on the curve");
    }
}

} // namespace

CurvePoint negate(const Curve& c, const CurvePoint& p) {
    require_on_curve(c, p, "negate");
    if (p.is_infinity()) {
        return p;
    }
    return CurvePoint(p.u(), -p.v());
}

CurvePoint add(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
    require_on_curve(c, p, "add");
    require_on_curve(c, q, "add");
    if (p.is_infinity()) {
        return q;
    }
    if (q.is_infinity()) {
        return p;
    }
    Rational lambda;
    if (p.u() == q.u()) {
        if (p.v() == -q.v()) {
            return CurvePoint::infinity(); // includes the v = 0 doubling
        }
        // Tangent: lambda = (3u^2 - n^2) / (2v)
        Rational n2(c.n() * c.n());
        lambda = (Rational(3) * p.u() * p.u() - n2) / (Rational(2) * p.v());
    } else {
        lambda = (q.v() - p.v()) / (q.u() - p.u());
    }
    Rational u3 = lambda * lambda - p.u() - q.u();
    Rational v3 = lambda * (p.u() - u3) - p.v();
    return CurvePoint(u3, v3);
}

CurvePoint scalar_mul(const Curve& c, const Integer& k, const CurvePoint& p) {
    require_on_curve(c, p, "scalar_mul");
    if (k == 0) {
        return CurvePoint::infinity();
    }
    if (k < 0) {
        return negate(c, scalar_mul(c, Integer(-k), p));
    }
    CurvePoint acc = CurvePoint::infinity();
    for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        acc = add(c, acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
            acc = add(c, acc, p);
        }
    }
    return acc;
}

QuarticTriple prop25_forward(const Curve& c, const CurvePoint& p) {
    require_on_curve(c, p, "prop25_forward");
    if (p.is_infinity()) {
        throw DomainError("prop25_forward: affine point required");
    }
    if (p.v() == 0) {
        throw TorsionPoint("prop25_forward: v = 0 forces t = 0");
    }
    const Rational& u = p.u();
    Rational n(c.n());
    Rational u2 = u * u;
    Rational n2 = n * n;
    QuarticTriple out;
    out.x = u2 + Rational(2) * n * u - n2;
    out.y = u2 - Rational(2) * n * u - n2;
    out.t = Rational(4) * p.v() * (u2 + n2);
    return out;
}

CurvePoint prop25_backward(const Curve& c, const Rational& x, const Rational& y,
                           const Rational& t) {
    if (x == 0) {
        throw DomainError("prop25_backward: x must be nonzero");
    }
    Rational n(c.n());
    if (pow4(x) - pow4(y) != n * t * t) {
        throw DomainError("prop25_backward: input does not satisfy x^4 - y^4 = n*t^2");
    }
    Rational x2 = x * x;
    Rational u = -(n * y * y) / x2;
    Rational v = (n * n * y * t) / (x2 * x);
    CurvePoint p(u, v);
    if (!is_on_curve(c, p)) {
        throw DomainError("prop25_backward: output not on curve"); // unreachable
    }
    return p;
}

} // namespace qf
