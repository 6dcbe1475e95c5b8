#include <doctest.h>

#include "qf/congruent.hpp"
#include "qf/json_io.hpp"
#include "qf/surfaces.hpp"
#include "support.hpp"

using namespace qf;

TEST_SUITE("surfaces") {

TEST_CASE("prop26 at the n=5 generator") {
    SurfaceSolution s = prop26_solution(Rational(5), Rational(-4), Rational(6));
    CHECK(s.coords() == std::vector<Rational>{Rational(-49), Rational(31), Rational(41),
                                              Rational(12)});
    // Both sides equal 6688322.
    CHECK(pow4(Rational(49)) + pow4(Rational(31)) == Rational(6688322));
    CHECK(Rational(2) * pow4(Rational(41)) + Rational(50) * pow4(Rational(12)) ==
          Rational(6688322));
}

TEST_CASE("prop26 at the doubled point") {
    SurfaceSolution s = prop26_solution(Rational(5), parse_rational("1681/144"),
                                        parse_rational("62279/1728"));
    CHECK(s.residual() == 0);
    for (const auto& c : s.coords()) {
        CHECK(c != 0);
    }
}

TEST_CASE("prop26 rejects torsion and off-curve input") {
    CHECK_THROWS_AS(prop26_solution(Rational(5), Rational(0), Rational(0)), TorsionPoint);
    CHECK_THROWS_AS(prop26_solution(Rational(5), Rational(1), Rational(1)), DomainError);
    Curve e5{Integer(5)};
    CHECK_THROWS_AS(prop26_solution(e5, CurvePoint::infinity()), DomainError);
    CHECK(prop26_solution(e5, CurvePoint(Rational(-4), Rational(6))).residual() == 0);
}

TEST_CASE("lemma27 spot values") {
    SurfaceSolution s5 = lemma27_solution(cert_to_quartic(family_i(Integer(1), Integer(1))));
    CHECK(s5.coords() == std::vector<Rational>{Rational(1681), Rational(720),
                                               Rational(1519), Rational(492)});
    SurfaceSolution s15 =
        lemma27_solution(cert_to_quartic(family_iii(Integer(2), Integer(1))));
    CHECK(s15.coords() == std::vector<Rational>{Rational(289), Rational(240), Rational(161),
                                                Rational(68)});
    CHECK_THROWS_AS(lemma27_solution(Rational(5), Rational(41), Rational(12), Rational(1520)),
                    InvalidCertificate);
}

TEST_CASE("lemma28 spot values") {
    SurfaceSolution s11 = lemma28_solution(Rational(1), Rational(1));
    CHECK(s11.coords() == std::vector<Rational>{Rational(2), Rational(2), Rational(3),
                                                Rational(-1)});
    // 16 + 64 = 80 = 81 - 1
    CHECK(Rational(1) * pow4(Rational(2)) + Rational(4) * pow4(Rational(2)) == Rational(80));
    CHECK(pow4(Rational(3)) - pow4(Rational(-1)) == Rational(80));

    SurfaceSolution s21 = lemma28_solution(Rational(2), Rational(1));
    CHECK(s21.coords() == std::vector<Rational>{Rational(1), Rational(2),
                                                parse_rational("5/2"),
                                                parse_rational("-3/2")});
    CHECK(Rational(2) + Rational(2) * pow4(Rational(2)) == Rational(34));
    CHECK(pow4(parse_rational("5/2")) - pow4(parse_rational("3/2")) == Rational(34));

    SurfaceSolution s12 = lemma28_solution(Rational(1), Rational(2));
    CHECK(s12.coords() == std::vector<Rational>{Rational(16), Rational(4), Rational(18),
                                                Rational(14)});
    CHECK(pow4(Rational(16)) + Rational(4) * pow4(Rational(4)) == Rational(66560));
    CHECK(pow4(Rational(18)) - pow4(Rational(14)) == Rational(66560));

    CHECK_THROWS_AS(lemma28_solution(Rational(0), Rational(1)), DomainError);
    CHECK_THROWS_AS(lemma28_solution(Rational(1), Rational(0)), DegenerateParameters);
}

TEST_CASE("prop26 identity modulo the curve relation") {
    MultiPoly u = MultiPoly::variable("u");
    MultiPoly v = MultiPoly::variable("v");
    MultiPoly n = MultiPoly::variable("n");
    MultiPoly x = u.pow(2) + MultiPoly(2) * n * u - n.pow(2);
    MultiPoly y = u.pow(2) - MultiPoly(2) * n * u - n.pow(2);
    MultiPoly z = u.pow(2) + n.pow(2);
    MultiPoly w = MultiPoly(2) * v;
    MultiPoly residual =
        x.pow(4) + y.pow(4) - MultiPoly(2) * z.pow(4) - MultiPoly(2) * n.pow(2) * w.pow(4);
    MultiPoly rhs = u.pow(3) - n.pow(2) * u;
    CHECK(test::reduce_square(residual, "v", rhs).is_zero());
}

TEST_CASE("lemma27 identity modulo the triple relation") {
    // X^8 + n^4 Y^8 - K^4 - 2 n^2 X^4 Y^4 = 0 once K^2 = X^4 - n^2 Y^4.
    MultiPoly X = MultiPoly::variable("X");
    MultiPoly Y = MultiPoly::variable("Y");
    MultiPoly K = MultiPoly::variable("K");
    MultiPoly n = MultiPoly::variable("n");
    MultiPoly residual = X.pow(8) + n.pow(4) * Y.pow(8) - K.pow(4) -
                         MultiPoly(2) * n.pow(2) * X.pow(4) * Y.pow(4);
    MultiPoly repl = X.pow(4) - n.pow(2) * Y.pow(4);
    CHECK(test::reduce_square(residual, "K", repl).is_zero());
}

TEST_CASE("lemma28 identity in t with symbolic s") {
    // s x^4 + (4/s) y^4 - z^4 + w^4 with the lemma's coordinates vanishes as
    // a rational function in (s, t).
    MultiPoly s = MultiPoly::variable("s");
    MultiPoly t = MultiPoly::variable("t");
    RatFunc x(MultiPoly(2) * t.pow(3), s);
    RatFunc y{MultiPoly(2) * t};
    RatFunc z = RatFunc(t.pow(4), s) + RatFunc{MultiPoly(2)};
    RatFunc w = RatFunc(t.pow(4), s) - RatFunc{MultiPoly(2)};
    RatFunc residual = RatFunc{s} * x.pow(4) + RatFunc(MultiPoly(4), s) * y.pow(4) -
                       z.pow(4) + w.pow(4);
    CHECK(residual.is_zero());
}

TEST_CASE("prop26 coordinates are nonzero on sampled points") {
    // u^2 +- 2nu - n^2 has irrational roots u = n(-1 +- sqrt 2), so no
    // rational point can zero a coordinate; sampled here.
    Curve e5{Integer(5)};
    CurvePoint p(Rational(-4), Rational(6));
    for (int k = 1; k <= 6; ++k) {
        CurvePoint q = scalar_mul(e5, Integer(k), p);
        SurfaceSolution s = prop26_solution(e5, q);
        for (const auto& c : s.coords()) {
            CHECK(c != 0);
        }
    }
}

TEST_CASE("surface JSON") {
    SurfaceSolution s = prop26_solution(Rational(5), Rational(-4), Rational(6));
    CHECK(to_json(s).dump() ==
          R"({"surface":"prop26","n":"5","coords":["-49","31","41","12"]})");
    SurfaceSolution l28 = lemma28_solution(Rational(2), Rational(1));
    CHECK(to_json(l28).dump() ==
          R"({"surface":"lemma28","s":"2","coords":["1","2","5/2","-3/2"]})");
}

} // TEST_SUITE
