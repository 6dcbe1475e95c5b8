#pragma once

#include "qf/exactnum.hpp"

namespace qf {

/// E_n: v^2 = u^3 - n^2*u over the rationals.
class Curve {
public:
    explicit Curve(Integer n);
    const Integer& n() const { return n_; }
    /// u^3 - n^2*u
    Rational rhs(const Rational& u) const;

    bool operator==(const Curve& o) const = default;

private:
    Integer n_;
};

/// Affine point or the point at infinity.
class CurvePoint {
public:
    static CurvePoint infinity();
    CurvePoint(Rational u, Rational v);

    bool is_infinity() const { return infinity_; }
    const Rational& u() const;
    const Rational& v() const;

    bool operator==(const CurvePoint& o) const;
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

private:
    CurvePoint() : infinity_(true) {}
    bool infinity_;
    Rational u_, v_;
};

bool is_on_curve(const Curve& c, const CurvePoint& p);

CurvePoint negate(const Curve& c, const CurvePoint& p);

/// Chord-tangent group law. Off-curve inputs are rejected.
CurvePoint add(const Curve& c, const CurvePoint& p, const CurvePoint& q);

/// Double-and-add from the most significant bit; k may be negative or zero.
CurvePoint scalar_mul(const Curve& c, const Integer& k, const CurvePoint& p);

/// (x, y, t) with x^4 - y^4 = n*t^2 and x*y*t != 0.
struct QuarticTriple {
    Rational x, y, t;
};

/// x = u^2+2nu-n^2, y = u^2-2nu-n^2, t = 4v(u^2+n^2). Throws TorsionPoint
/// when v = 0 (that forces t = 0).
QuarticTriple prop25_forward(const Curve& c, const CurvePoint& p);

/// (u, v) = (-n*y^2/x^2, n^2*y*t/x^3); requires x != 0 and x^4-y^4 = n*t^2.
CurvePoint prop25_backward(const Curve& c, const Rational& x, const Rational& y,
                           const Rational& t);

} // namespace qf
