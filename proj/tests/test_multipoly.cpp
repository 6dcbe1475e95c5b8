#include <doctest.h>

#include "qf/json_io.hpp"
#include "qf/multipoly.hpp"
#include "support.hpp"

using namespace qf;

namespace {

MultiPoly V(const char* name, std::uint32_t e = 1) { return MultiPoly::variable(name, e); }

} // namespace

TEST_SUITE("multipoly") {

TEST_CASE("product of conjugates") {
    MultiPoly a = V("a"), b = V("b");
    CHECK((a + b) * (a - b) == a.pow(2) - b.pow(2));
}

TEST_CASE("binomial expansion of (a+b)^4") {
    MultiPoly a = V("a"), b = V("b");
    MultiPoly expanded = MultiPoly::from_terms({
        {Rational(1), {{"a", 4}}},
        {Rational(4), {{"a", 3}, {"b", 1}}},
        {Rational(6), {{"a", 2}, {"b", 2}}},
        {Rational(4), {{"a", 1}, {"b", 3}}},
        {Rational(1), {{"b", 4}}},
    });
    CHECK((a + b).pow(4) == expanded);
}

TEST_CASE("difference-of-fourth-powers identity") {
    // (a+b)^4 - (a-b)^4 = 8a^3b + 8ab^3
    MultiPoly a = V("a"), b = V("b");
    MultiPoly residual = (a + b).pow(4) - (a - b).pow(4) -
                         MultiPoly(8) * a.pow(3) * b - MultiPoly(8) * a * b.pow(3);
    CHECK(residual.is_zero());
}

TEST_CASE("pow(p, 0) is one") {
    MultiPoly p = V("x") + MultiPoly(3);
    CHECK(p.pow(0) == MultiPoly(Rational(1)));
}

TEST_CASE("substitute renames variables") {
    MultiPoly p = V("x", 2) + V("y", 2);
    std::map<std::string, RatFunc> bind{{"x", RatFunc{V("a")}}, {"y", RatFunc{V("b")}}};
    RatFunc r = substitute(p, bind);
    CHECK(r.is_polynomial());
    CHECK(r.num() == V("a", 2) + V("b", 2));
}

TEST_CASE("substitute constants evaluates exactly") {
    // x^4 - n^2 y^4 at (41, 12, 5); oracle computed with plain integers.
    Integer oracle = Integer(41) * 41 * 41 * 41 - Integer(25) * (Integer(12) * 12 * 12 * 12);
    CHECK(oracle == 2307361);
    MultiPoly p = V("x", 4) - V("n", 2) * V("y", 4);
    std::map<std::string, RatFunc> bind{{"x", RatFunc{Rational(41)}},
                                        {"y", RatFunc{Rational(12)}},
                                        {"n", RatFunc{Rational(5)}}};
    RatFunc r = substitute(p, bind);
    CHECK(r.num().constant_value() == Rational(oracle));
    CHECK(r.den().constant_value() == 1);
}

TEST_CASE("substitute hits the curve relation at the n=5 point") {
    MultiPoly p = V("v", 2) - V("u", 3) + V("n", 2) * V("u");
    std::map<std::string, RatFunc> bind{
        {"u", RatFunc{parse_rational("1681/144")}},
        {"v", RatFunc{parse_rational("62279/1728")}},
        {"n", RatFunc{Rational(5)}}};
    CHECK(substitute(p, bind).is_zero());
}

TEST_CASE("substitute requires every variable bound") {
    MultiPoly p = V("x") + V("y");
    std::map<std::string, RatFunc> bind{{"x", RatFunc{Rational(1)}}};
    CHECK_THROWS_AS(substitute(p, bind), DomainError);
}

TEST_CASE("is_zero and eval_at") {
    MultiPoly a = V("a"), b = V("b");
    MultiPoly p = a.pow(3) * b + MultiPoly(7);
    CHECK((p - p).is_zero());

    MultiPoly x_bar = a.pow(8) + MultiPoly(24) * a.pow(4) * b.pow(4) +
                      MultiPoly(16) * b.pow(8);
    CHECK(x_bar.eval_at({{"a", Rational(1)}, {"b", Rational(1)}}) == 41);

    MultiPoly y_bar = MultiPoly(4) * a * b * (MultiPoly(4) * b.pow(4) - a.pow(4));
    CHECK(y_bar.eval_at({{"a", Rational(1)}, {"b", Rational(2)}}) == 504);
}

TEST_CASE("eval_at requires bindings") {
    CHECK_THROWS_AS(V("q").eval_at({}), DomainError);
}

TEST_CASE("clear_denominators on rational vectors") {
    auto cleared = clear_denominators(std::vector<Rational>{
        normalize(Integer(1), Integer(2)), normalize(Integer(3), Integer(2))});
    CHECK(cleared.common_denominator == 2);
    CHECK(cleared.coords == std::vector<Integer>{Integer(1), Integer(3)});
}

TEST_CASE("clear_denominators with a shared polynomial denominator") {
    MultiPoly a = V("a"), b = V("b");
    std::vector<RatFunc> coords{RatFunc(a, a + b), RatFunc(b, a + b)};
    auto cleared = clear_denominators(coords);
    CHECK(cleared.common_denominator == a + b);
    CHECK(cleared.coords[0] == a);
    CHECK(cleared.coords[1] == b);
}

TEST_CASE("clear_denominators falls back to products for distinct non-monomials") {
    MultiPoly a = V("a"), b = V("b");
    std::vector<RatFunc> coords{RatFunc(MultiPoly(1), a + b),
                                RatFunc(MultiPoly(1), a - b)};
    auto cleared = clear_denominators(coords);
    CHECK(cleared.common_denominator == (a + b) * (a - b));
    CHECK(cleared.coords[0] == a - b);
    CHECK(cleared.coords[1] == a + b);
}

TEST_CASE("ring axioms on random polynomials") {
    test::Rng rng;
    const std::vector<std::string> vars{"a", "b"};
    for (int i = 0; i < 40; ++i) {
        MultiPoly p = rng.poly(vars, 4, 3, 24);
        MultiPoly q = rng.poly(vars, 4, 3, 24);
        MultiPoly r = rng.poly(vars, 4, 3, 24);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("substitute then eval equals eval of the composition") {
    test::Rng rng;
    const std::vector<std::string> vars{"x", "y"};
    for (int i = 0; i < 25; ++i) {
        MultiPoly p = rng.poly(vars, 4, 3, 16);
        RatFunc bx(rng.poly({"t"}, 3, 2, 16), rng.nonzero_poly({"t"}, 2, 1, 8));
        RatFunc by(rng.poly({"t"}, 3, 2, 16), rng.nonzero_poly({"t"}, 2, 1, 8));
        Rational t0 = rng.rational(16);
        std::map<std::string, Rational> pt{{"t", t0}};
        Rational dx = bx.den().eval_at(pt);
        Rational dy = by.den().eval_at(pt);
        if (dx == 0 || dy == 0) {
            continue;
        }
        RatFunc composed = substitute(p, {{"x", bx}, {"y", by}});
        Rational via_subst = composed.eval_at(pt);
        Rational direct = p.eval_at({{"x", bx.eval_at(pt)}, {"y", by.eval_at(pt)}});
        CHECK(via_subst == direct);
    }
}

TEST_CASE("cleared coordinates scale a degree-4 diagonal form by D^4") {
    test::Rng rng;
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<RatFunc> coords;
        for (int i = 0; i < 3; ++i) {
            coords.emplace_back(rng.nonzero_poly({"t"}, 3, 2, 12),
                                rng.nonzero_poly({"t"}, 2, 1, 8));
        }
        auto cleared = clear_denominators(coords);
        for (const auto& c : cleared.coords) {
            (void)c; // polynomials by construction
        }
        std::vector<Rational> alphas{Rational(1), Rational(-2), Rational(3)};
        for (int s = 0; s < 5; ++s) {
            Rational t0 = rng.rational(12);
            std::map<std::string, Rational> pt{{"t", t0}};
            Rational d = cleared.common_denominator.eval_at(pt);
            bool defined = true;
            for (const auto& c : coords) {
                if (c.den().eval_at(pt) == 0) {
                    defined = false;
                }
            }
            if (!defined) {
                continue;
            }
            Rational original(0), scaled(0);
            for (std::size_t i = 0; i < coords.size(); ++i) {
                original += alphas[i] * pow4(coords[i].eval_at(pt));
                scaled += alphas[i] * pow4(cleared.coords[i].eval_at(pt));
            }
            CHECK(scaled == pow4(d) * original);
        }
    }
}

TEST_CASE("divide_exact") {
    MultiPoly a = V("a"), b = V("b");
    MultiPoly prod = (a + b) * (a.pow(2) - a * b + MultiPoly(5));
    auto q = prod.divide_exact(a + b);
    REQUIRE(q.has_value());
    CHECK(*q == a.pow(2) - a * b + MultiPoly(5));
    CHECK(!(prod + MultiPoly(1)).divide_exact(a + b).has_value());
    CHECK_THROWS_AS(prod.divide_exact(MultiPoly()), DomainError);
}

TEST_CASE("ratfunc equality by cross-multiplication") {
    MultiPoly a = V("a"), b = V("b");
    RatFunc one(a + b, a + b);
    CHECK(one == RatFunc{Rational(1)});
    RatFunc half(a, MultiPoly(2) * a);
    CHECK(half == RatFunc{normalize(Integer(1), Integer(2))});
    CHECK(RatFunc(a, b) != RatFunc(b, a));
    CHECK_THROWS_AS(RatFunc(a, MultiPoly()), DomainError);
}

TEST_CASE("ratfunc monomial and content cancellation") {
    MultiPoly a = V("a"), b = V("b");
    RatFunc f(MultiPoly(4) * a.pow(3) * b, MultiPoly(2) * a * b.pow(2));
    // 4a^3b / 2ab^2 -> 2a^2 / b
    CHECK(f.num() == MultiPoly(2) * a.pow(2));
    CHECK(f.den() == b);
}

TEST_CASE("JSON round trip matches the canonical term order") {
    MultiPoly p = MultiPoly(24) * V("a", 4) * V("b", 4) + V("a", 8) - MultiPoly(3);
    Json j = to_json(p);
    CHECK(j.dump() == R"([["1",{"a":8}],["24",{"a":4,"b":4}],["-3",{}]])");
    CHECK(multipoly_from_json(j) == p);

    test::Rng rng;
    for (int i = 0; i < 25; ++i) {
        MultiPoly q = rng.poly({"a", "b", "c"}, 5, 4, 32);
        CHECK(multipoly_from_json(to_json(q)) == q);
    }
}

} // TEST_SUITE
