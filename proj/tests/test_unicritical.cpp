#include <doctest.h>

#include "preper/curve_builder.hpp"
#include "preper/unicritical.hpp"

using namespace preper;

namespace {

IntPoly P(const char *s) { return parse<Int>(s); }

OrbitCache &cache()
{
    static OrbitCache c;
    return c;
}

} // namespace

TEST_CASE("specialisation at a = 0")
{
    const UniPoly<Int> b2p1({Int(1), Int(0), Int(1)}, Var::B);
    CHECK(specialize_a0(h12_closed_form()) == b2p1);
    CHECK(specialize_a0(h02_closed_form()) == b2p1);
    CHECK(specialize_a0(P("b-a")) == UniPoly<Int>({Int(0), Int(1)}, Var::B));
    for (unsigned k = 0; k <= 4; ++k) {
        const IntPoly h = h_kn(k, 2, cache()).h;
        CHECK(specialize_a0(h).degree() == h.deg_b());
    }
}

TEST_CASE("resultant routes")
{
    for (unsigned k : {2u, 4u}) {
        const UniResultant r = uni_resultant_check(k, cache());
        CHECK(r.univariate == 9);
        CHECK(r.bivariate_at_zero == 9);
    }
    CHECK_THROWS_AS(uni_resultant_check(3, cache()), DomainError);
    CHECK_THROWS_AS(uni_resultant_check(0, cache()), DomainError);
}

TEST_CASE("univariate Eisenstein certificate")
{
    for (unsigned k : {2u, 4u}) {
        const UniEisenstein e = uni_eisenstein(k, cache());
        CHECK(e.cond1);
        CHECK(e.cond2);
        CHECK(e.cond3);
        CHECK(e.verdict);
        CHECK(e.exponent * 2 == static_cast<unsigned>(e.degree));
        CHECK(e.resultant == 9);
    }
    // A planted failure: (b^2+1)^2 + 9 has resultant 81 against b^2+1.
    const UniEisenstein bad = uni_eisenstein(2, P("(b^2+1)^2+9"));
    CHECK(bad.cond1);
    CHECK_FALSE(bad.cond3);
    CHECK_FALSE(bad.verdict);
}

TEST_CASE("odd k is only recorded")
{
    const UniOddRecord r = uni_odd_record(3, h_kn(3, 2, cache()).h);
    CHECK(r.degree == 34);
    // h_{3,2}(0, -i) = 0, so the specialisation meets b^2+1.
    CHECK(r.resultant == 0);
}

TEST_CASE("coalescence for the unicritical family")
{
    for (unsigned n = 1; n <= 3; ++n) {
        CHECK(unicritical_coalescence(n));
    }
    CHECK_THROWS_AS(unicritical_coalescence(0), DomainError);
}
