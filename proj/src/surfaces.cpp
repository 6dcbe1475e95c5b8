#include "qf/surfaces.hpp"

namespace qf {

std::string surface_name(SurfaceId id) {
    switch (id) {
    case SurfaceId::Prop26: return "prop26";
    case SurfaceId::Lemma27: return "lemma27";
    case SurfaceId::Lemma28: return "lemma28";
    }
    throw DomainError("unknown surface id");
}

SurfaceSolution::SurfaceSolution(SurfaceId id, Rational param, std::vector<Rational> coords)
    : id_(id), param_(std::move(param)), coords_(std::move(coords)) {
    if (coords_.size() != 4) {
        throw DomainError("surface solution requires 4 coordinates");
    }
    if (residual() != 0) {
        throw DomainError("surface solution does not satisfy its equation");
    }
    for (const auto& c : coords_) {
        if (c == 0) {
            throw DegenerateParameters("surface solution has a zero coordinate");
        }
    }
}

Rational SurfaceSolution::residual() const {
    const Rational& x = coords_[0];
    const Rational& y = coords_[1];
    const Rational& z = coords_[2];
    const Rational& w = coords_[3];
    switch (id_) {
    case SurfaceId::Prop26:
        return pow4(x) + pow4(y) - Rational(2) * pow4(z) -
               Rational(2) * param_ * param_ * pow4(w);
    case SurfaceId::Lemma27:
        return pow4(x) + pow4(y) - pow4(z) - Rational(2) * param_ * param_ * pow4(w);
    case SurfaceId::Lemma28:
        return param_ * pow4(x) + (Rational(4) / param_) * pow4(y) - pow4(z) + pow4(w);
    }
    throw DomainError("unknown surface id");
}

SurfaceSolution prop26_solution(const Rational& n, const Rational& u, const Rational& v) {
    if (v * v != u * u * u - n * n * u) {
        throw DomainError("prop26_solution: (u, v) is not on v^2 = u^3 - n^2*u");
    }
    if (v == 0) {
        throw TorsionPoint("prop26_solution: v = 0");
    }
    Rational u2 = u * u;
    Rational n2 = n * n;
    std::vector<Rational> coords{
        u2 + Rational(2) * n * u - n2,
        u2 - Rational(2) * n * u - n2,
        u2 + n2,
        Rational(2) * v,
    };
    return SurfaceSolution(SurfaceId::Prop26, n, std::move(coords));
}

SurfaceSolution prop26_solution(const Curve& c, const CurvePoint& p) {
    if (p.is_infinity()) {
        throw DomainError("prop26_solution: affine point required");
    }
    return prop26_solution(Rational(c.n()), p.u(), p.v());
}

SurfaceSolution lemma27_solution(const Rational& n, const Rational& X, const Rational& Y,
                                 const Rational& K) {
    if (pow4(X) - n * n * pow4(Y) != K * K) {
        throw InvalidCertificate("lemma27_solution: X^4 - n^2*Y^4 = K^2 fails");
    }
    std::vector<Rational> coords{X * X, n * Y * Y, K, X * Y};
    return SurfaceSolution(SurfaceId::Lemma27, n, std::move(coords));
}

SurfaceSolution lemma27_solution(const QuarticSquareTriple& q) {
    return lemma27_solution(Rational(q.n()), Rational(q.X()), Rational(q.Y()),
                            Rational(q.K()));
}

SurfaceSolution lemma28_solution(const Rational& s, const Rational& t) {
    if (s == 0) {
        throw DomainError("lemma28_solution: s must be nonzero");
    }
    if (t == 0) {
        throw DegenerateParameters("lemma28_solution: t must be nonzero");
    }
    Rational t3 = t * t * t;
    Rational t4 = t3 * t;
    std::vector<Rational> coords{
        Rational(2) * t3 / s,
        Rational(2) * t,
        t4 / s + Rational(2),
        t4 / s - Rational(2),
    };
    return SurfaceSolution(SurfaceId::Lemma28, s, std::move(coords));
}

} // namespace qf
