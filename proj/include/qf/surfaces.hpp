#pragma once

#include <string>
#include <vector>

#include "qf/congruent.hpp"
#include "qf/elliptic.hpp"
#include "qf/exactnum.hpp"

namespace qf {

enum class SurfaceId { Prop26, Lemma27, Lemma28 };

std::string surface_name(SurfaceId id);

/// A verified rational solution of one of the three surface equations:
///   Prop26:  x^4 + y^4 = 2z^4 + 2n^2 w^4
///   Lemma27: x^4 + y^4 = z^4 + 2n^2 w^4
///   Lemma28: s x^4 + (4/s) y^4 = z^4 - w^4
/// `param` is n for the first two and s for the third.
class SurfaceSolution {
public:
    SurfaceSolution(SurfaceId id, Rational param, std::vector<Rational> coords);

    SurfaceId id() const { return id_; }
    const Rational& param() const { return param_; }
    const std::vector<Rational>& coords() const { return coords_; }

    /// lhs - rhs of the surface equation; zero by construction.
    Rational residual() const;

private:
    SurfaceId id_;
    Rational param_;
    std::vector<Rational> coords_;
};

/// (u^2+2nu-n^2, u^2-2nu-n^2, u^2+n^2, 2v) on x^4+y^4 = 2z^4+2n^2w^4.
/// Throws TorsionPoint when v = 0. Accepts any rational congruent value n;
/// the point must satisfy v^2 = u^3 - n^2 u for that n.
SurfaceSolution prop26_solution(const Rational& n, const Rational& u, const Rational& v);
SurfaceSolution prop26_solution(const Curve& c, const CurvePoint& p);

/// (X^2, nY^2, K, XY) on x^4+y^4 = z^4+2n^2w^4 (squares the triple relation).
SurfaceSolution lemma27_solution(const QuarticSquareTriple& q);
SurfaceSolution lemma27_solution(const Rational& n, const Rational& X, const Rational& Y,
                                 const Rational& K);

/// (2t^3/s, 2t, t^4/s+2, t^4/s-2) on s x^4 + (4/s) y^4 = z^4 - w^4.
SurfaceSolution lemma28_solution(const Rational& s, const Rational& t);

} // namespace qf
