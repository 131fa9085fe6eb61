#include <random>

#include <doctest.h>

#include "oracle/dense_poly.hpp"
#include "preper/gcd.hpp"
#include "preper/resultant.hpp"

using namespace preper;

namespace {

IntPoly P(const char *s) { return parse<Int>(s); }

bool divides(const IntPoly &d, const IntPoly &p) { return try_div(p, d).has_value(); }

} // namespace

TEST_CASE("gcd examples")
{
    const IntPoly f11 = P("b^3-3*a^2*b+2*a^3");
    const IntPoly f02 = P("b^3-3*a^2*b+2*a^3+b-a");
    CHECK(primitive_gcd(f11, f02) == P("b-a"));
    CHECK(primitive_gcd(f11, IntPoly::one()) == IntPoly::one());
    // f^2(a) - f(a) against f^2(-a) - f(-a).
    const IntPoly plus = P("b^3-3*a^2*b+2*a^3+b-b");
    const IntPoly minus = P("(4*a^3+b)^3-3*a^2*(4*a^3+b)+2*a^3+b-(4*a^3+b)");
    CHECK(primitive_gcd(plus, minus) == IntPoly::one());
}

TEST_CASE("gcd conventions")
{
    CHECK(primitive_gcd(P("6*b+6"), P("4*b+4")) == P("b+1"));
    CHECK(primitive_gcd(P("-(b-a)*(b+1)"), P("(b-a)*(b+2)")) == P("b-a"));
    CHECK(primitive_gcd(P("-3*b+3*a"), IntPoly()) == P("b-a"));
    CHECK(primitive_gcd(P("a*(b+1)"), P("a*(b+2)")) == P("a"));
    CHECK(primitive_gcd(P("(a^2+1)*(b-a)^2"), P("(a^2+1)*(b-a)*(b+a)")) == P("(a^2+1)*(b-a)"));
    CHECK(primitive_gcd(P("a^2-1"), P("a^2+2*a+1")) == P("a+1"));
    CHECK_THROWS_AS(primitive_gcd(IntPoly(), IntPoly()), DomainError);
    const auto g = gcd_with_cofactors(P("(b-a)^2*(b+2*a)"), P("(b-a)*(b^2+1)"));
    CHECK(g.gcd == P("b-a"));
    CHECK(g.cofactor_p == P("(b-a)*(b+2*a)"));
    CHECK(g.cofactor_q == P("b^2+1"));
    CHECK(content_in_b(P("(a^2+1)*(b-a)+(a^2+1)*a")) == P("a^2+1"));
}

TEST_CASE("gcd of products with planted common factors")
{
    std::mt19937_64 rng(77);
    for (int t = 0; t < 60; ++t) {
        const IntPoly g = oracle::random_poly(rng, 6, 6, 20) + P("b^6");
        const IntPoly u = oracle::random_poly(rng, 6, 6, 20) + P("b^5");
        const IntPoly v = oracle::random_poly(rng, 6, 6, 20) + P("b^4");
        const IntPoly p = g * u;
        const IntPoly q = g * v;
        const IntPoly d = primitive_gcd(p, q);
        CHECK(divides(d, p));
        CHECK(divides(d, q));
        // Integer content of g is not part of the primitive gcd.
        CHECK(divides(exact_div(g, IntPoly::constant(content(g))), d));
        CHECK(primitive_gcd(q, p) == d);
        CHECK(content(d) == 1);
        CHECK(sgn(d.leading_term().c) > 0);
        // The cofactors share nothing with positive degree in b.
        const IntPoly cp = exact_div(p, d);
        const IntPoly cq = exact_div(q, d);
        if (cp.deg_b() > 0 && cq.deg_b() > 0) {
            CHECK_FALSE(resultant_in_b(cp, cq).is_zero());
        }
        const auto full = gcd_with_cofactors(p, q);
        CHECK(full.gcd == d);
        CHECK(full.gcd * full.cofactor_p == p);
        CHECK(full.gcd * full.cofactor_q == q);
    }
}

TEST_CASE("saturation")
{
    CHECK(saturate(P("(b-a)^2*(b+2*a)"), P("b-a")) == P("b+2*a"));
    const IntPoly p = P("b^4-a*b+3");
    CHECK(saturate(p, IntPoly::one()) == p);
    CHECK(saturate(P("(b-a)^3*((b-a)^2+1)"), P("(b-a)*(b+2*a)")) == P("(b-a)^2+1"));
    CHECK_THROWS_AS(saturate(IntPoly(), p), DomainError);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const IntPoly x = oracle::random_poly(rng, 4, 5, 9) + P("b^4");
        const IntPoly y = oracle::random_poly(rng, 4, 5, 9) + P("b^3");
        const IntPoly z = oracle::random_poly(rng, 3, 4, 9) + P("b^3");
        const IntPoly input = x.pow(2) * y * z;
        const Saturation s = saturate_detailed(input, x * z);
        CHECK(s.result * s.removed == input);
        CHECK(primitive_gcd(s.result, x * z).is_constant());
        CHECK(divides(s.result, input));
    }
}
