#include <doctest.h>

#include "preper/curve_builder.hpp"
#include "preper/gcd.hpp"

using namespace preper;

namespace {

IntPoly P(const char *s) { return parse<Int>(s); }

OrbitCache &cache()
{
    static OrbitCache c;
    return c;
}

// Computed independently with FLINT's fmpz_mpoly factorisation of f_{2,2}.
const char *const kH22 =
    "b^12-12*a^2*b^10+8*a^3*b^9+54*a^4*b^8-72*a^5*b^7-84*a^6*b^6+216*a^7*b^5-63*a^8*b^4"
    "-184*a^9*b^3+216*a^10*b^2-96*a^11*b+16*a^12+3*b^10-27*a^2*b^8+18*a^3*b^7+81*a^4*b^6"
    "-108*a^5*b^5-45*a^6*b^4+162*a^7*b^3-108*a^8*b^2+24*a^9*b+3*b^8-21*a^2*b^6+12*a^3*b^5"
    "+45*a^4*b^4-48*a^5*b^3-15*a^6*b^2+36*a^7*b-12*a^8+2*b^6-12*a^2*b^4+8*a^3*b^3"
    "+18*a^4*b^2-24*a^5*b+8*a^6+3*b^4-9*a^2*b^2+6*a^3*b+1";

} // namespace

TEST_CASE("closed forms for small pairs")
{
    CHECK(h_kn_generic(0, 2, cache()).h == P("(b-a)*(b+2*a)+1"));
    CHECK(h_kn_generic(1, 2, cache()).h == P("(b-a)^2+1"));
    CHECK(h_kn_generic(1, 1, cache()).h == P("b+2*a"));
    CHECK(h_kn_generic(0, 1, cache()).h == P("b-a"));
    CHECK(h02_closed_form() == P("b^2+a*b-2*a^2+1"));
    CHECK(h12_closed_form() == P("b^2-2*a*b+a^2+1"));
}

TEST_CASE("h_{2,2} matches the external oracle")
{
    CHECK(h_kn_generic(2, 2, cache()).h == P(kH22));
    CHECK(h_k2_pipeline(2, cache()).h == P(kH22));
}

TEST_CASE("staged and generic constructions agree")
{
    for (unsigned k = 2; k <= 4; ++k) {
        CAPTURE(k);
        const CurvePoly g = h_kn_generic(k, 2, cache());
        const CurvePoly p = h_k2_pipeline(k, cache());
        CHECK(g.h == p.h);
        CHECK(p.trace.removed_h02 == (k % 2 == 1));
        CHECK(p.trace.line_multiplicity >= 1);
        CHECK(reconstruct(p) == f_kn(k, 2, cache()));
        CHECK(reconstruct(g) == f_kn(k, 2, cache()));
        CHECK(p.trace.route == "pipeline");
        CHECK(g.trace.route == "generic");
        CHECK(p.trace.h_degree == p.h.deg_total());
    }
    CHECK_THROWS_AS(h_k2_pipeline(1, cache()), DomainError);
    CHECK(h_kn(1, 2, cache()).trace.route == "generic");
    CHECK(h_kn(3, 2, cache()).trace.route == "pipeline");
}

TEST_CASE("mod-3 exponent")
{
    CHECK(h_kn_mod3_exponent(h_kn_generic(1, 2, cache())) == 1);
    CHECK(h_kn_mod3_exponent(h_kn_generic(0, 2, cache())) == 1);
    const CurvePoly h22 = h_k2_pipeline(2, cache());
    CHECK(h_kn_mod3_exponent(h22) == static_cast<unsigned>(h22.h.deg_b() / 2));
    CHECK(mod3(h22.h) == mod3(h12_closed_form()).pow(6));

    CurvePoly fake{5, 2, P("(b-a)^2+2"), {}};
    CHECK_THROWS_AS(h_kn_mod3_exponent(fake), NotAPower);
    fake.h = P("b^3+1");
    CHECK_THROWS_AS(h_kn_mod3_exponent(fake), NotAPower);
    CHECK_THROWS_AS(h_kn_mod3_exponent(h_kn_generic(1, 1, cache())), DomainError);
}

TEST_CASE("constructed curves are coprime to every lower relation")
{
    for (unsigned k = 0; k <= 4; ++k) {
        for (unsigned n : {1u, 2u}) {
            if (k + n > 5) {
                continue;
            }
            const IntPoly h = h_kn(k, n, cache()).h;
            CHECK(h.is_monic_in_b());
            for (unsigned l = 0; l <= k; ++l) {
                for (unsigned m = 1; m <= n; ++m) {
                    if (n % m != 0 || (l == k && m == n)) {
                        continue;
                    }
                    CAPTURE(k);
                    CAPTURE(n);
                    CAPTURE(l);
                    CAPTURE(m);
                    CHECK(primitive_gcd(h, f_kn(l, m, cache())).is_constant());
                }
            }
        }
    }
}

TEST_CASE("parity and constant term")
{
    for (unsigned k = 0; k <= 4; ++k) {
        const IntPoly h2 = h_kn(k, 2, cache()).h;
        CHECK(parity_of(h2) == Parity::Even);
        const GaussRat c = eval_point(h2, GaussRat(0L), GaussRat(0L));
        CHECK(c.den() == 1);
        CHECK(c.num().im() == 0);
        CHECK(mpz_fdiv_ui(c.num().re().get_mpz_t(), 3) == 1);
        const IntPoly h1 = h_kn(k, 1, cache()).h;
        CHECK(parity_of(h1) != Parity::Mixed);
    }
}

// Degrees from the same external factorisation.
TEST_CASE("degree bookkeeping")
{
    const long expected[] = {2, 2, 12, 34, 108};
    for (unsigned k = 0; k <= 4; ++k) {
        CHECK(h_kn(k, 2, cache()).h.deg_b() == expected[k]);
    }
}
