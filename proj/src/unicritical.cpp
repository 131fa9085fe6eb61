#include "preper/unicritical.hpp"

#include "preper/criteria.hpp"
#include "preper/curve_builder.hpp"
#include "preper/f3_univariate.hpp"

namespace preper {

namespace {

const UniPoly<Int> &b2_plus_1()
{
    static const UniPoly<Int> p({Int(1), Int(0), Int(1)}, Var::B);
    return p;
}

UniPoly<F3> mod3(const UniPoly<Int> &p)
{
    std::vector<F3> c;
    c.reserve(p.coeffs().size());
    for (const Int &x : p.coeffs()) {
        c.push_back(F3::from_int(x));
    }
    return UniPoly<F3>(std::move(c), p.var());
}

void require_even(unsigned k)
{
    if (k < 2 || k % 2 != 0) {
        throw DomainError("the unicritical check covers even k >= 2, got " + std::to_string(k));
    }
}

} // namespace

UniResultant uni_resultant_check(unsigned k, const IntPoly &h_k2)
{
    require_even(k);
    UniResultant r;
    r.k = k;
    r.univariate = resultant(specialize_a0(h_k2), b2_plus_1());
    r.bivariate_at_zero = resultant_h12(h_k2).coeff(0);
    if (r.univariate != r.bivariate_at_zero) {
        throw Error("resultant routes disagree at k = " + std::to_string(k) + ": "
                    + r.univariate.get_str() + " vs " + r.bivariate_at_zero.get_str());
    }
    return r;
}

UniResultant uni_resultant_check(unsigned k, OrbitCache &cache)
{
    require_even(k);
    return uni_resultant_check(k, h_kn(k, 2, cache).h);
}

UniEisenstein uni_eisenstein(unsigned k, const IntPoly &h_k2)
{
    require_even(k);
    UniEisenstein e;
    e.k = k;
    const UniPoly<Int> g = specialize_a0(h_k2);
    e.degree = g.degree();
    const UniPoly<F3> base = mod3(b2_plus_1());
    if (e.degree % 2 == 0) {
        e.exponent = static_cast<unsigned>(e.degree / 2);
        e.cond1 = mod3(g) == base.pow(e.exponent);
    }
    e.cond2 = f3_univariate_irreducible(base);
    e.resultant = resultant(g, b2_plus_1());
    e.cond3 = mpz_divisible_ui_p(e.resultant.get_mpz_t(), 81) == 0;
    e.verdict = e.cond1 && e.cond2 && e.cond3;
    return e;
}

UniEisenstein uni_eisenstein(unsigned k, OrbitCache &cache)
{
    require_even(k);
    return uni_eisenstein(k, h_kn(k, 2, cache).h);
}

UniOddRecord uni_odd_record(unsigned k, const IntPoly &h_k2)
{
    UniOddRecord r;
    r.k = k;
    const UniPoly<Int> g = specialize_a0(h_k2);
    r.degree = g.degree();
    r.resultant = g.degree() >= 1 ? resultant(g, b2_plus_1()) : Int(1);
    return r;
}

bool unicritical_coalescence(unsigned n)
{
    if (n == 0) {
        throw DomainError("coalescence check needs n >= 1");
    }
    const UniPoly<Int> b({Int(0), Int(1)}, Var::B);
    std::vector<UniPoly<Int>> orbit{UniPoly<Int>(Var::B)};
    for (unsigned m = 1; m <= n + 1; ++m) {
        const auto &z = orbit.back();
        orbit.push_back(z * z * z + b);
    }
    const auto lhs = orbit[n + 1] - orbit[1];
    return UniPoly<Int>::try_div(lhs, orbit[n]).has_value();
}

} // namespace preper
