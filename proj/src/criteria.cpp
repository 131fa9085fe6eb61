#include "preper/criteria.hpp"

#include <utility>

#include "preper/f3_univariate.hpp"
#include "preper/gcd.hpp"

namespace preper {

namespace {

std::string render_in_t(const UniPoly<F3> &u)
{
    std::string s = UniPoly<F3>(u.coeffs(), Var::B).to_string();
    for (auto &ch : s) {
        if (ch == 'b') {
            ch = 't';
        }
    }
    return s;
}

} // namespace

std::optional<UniPoly<F3>> as_line_polynomial(const F3Poly &p)
{
    UniPoly<F3> u = specialize_a0(p);
    if (compose_line(u) != p) {
        return std::nullopt;
    }
    return u;
}

bool f3_irreducible(const F3Poly &p)
{
    auto u = as_line_polynomial(p);
    if (!u) {
        throw UnsupportedShape("only polynomials in b - a are supported: " + render(p));
    }
    return f3_univariate_irreducible(*u);
}

EisensteinCertificate eisenstein_check(const IntPoly &g, const IntPoly &h, std::string g_id,
                                       std::string h_id)
{
    if (g.is_constant() || h.is_constant()) {
        throw DomainError("Eisenstein test needs nonconstant polynomials");
    }
    if (!g.is_monic_in_b() || !h.is_monic_in_b()) {
        throw DomainError("Eisenstein test needs polynomials monic in b");
    }
    EisensteinCertificate cert;
    cert.g_id = std::move(g_id);
    cert.h_id = std::move(h_id);

    const F3Poly hbar = mod3(h);
    const long dg = g.deg_b();
    const long dh = h.deg_b();
    if (dg % dh == 0) {
        cert.cond1.exponent = static_cast<unsigned>(dg / dh);
        cert.cond1.holds = mod3(g) == hbar.pow(cert.cond1.exponent);
    }

    const auto line = as_line_polynomial(hbar);
    if (!line) {
        throw UnsupportedShape("base is not a polynomial in b - a mod 3: " + render(hbar));
    }
    cert.cond2.witness = render_in_t(*line);
    cert.cond2.holds = f3_univariate_irreducible(*line);

    cert.cond3.resultant = resultant_in_b(g, h);
    mpz_ui_pow_ui(cert.cond3.modulus.get_mpz_t(), 3, static_cast<unsigned long>(2 * dh));
    for (const Int &c : cert.cond3.resultant.coeffs()) {
        if (mpz_divisible_p(c.get_mpz_t(), cert.cond3.modulus.get_mpz_t()) == 0) {
            cert.cond3.holds = true;
            break;
        }
    }
    cert.verdict = cert.cond1.holds && cert.cond2.holds && cert.cond3.holds;
    return cert;
}

LineResultant unit_normalized(UniPoly<GaussInt> p)
{
    LineResultant r;
    if (p.is_zero()) {
        r.unit = GaussInt(1L);
        r.normalized = p;
        r.raw = std::move(p);
        return r;
    }
    const UnitSplit split = gauss_unit_normalize(p.leading());
    r.unit = split.unit;
    r.normalized = p.scaled(split.unit.conj());
    r.raw = std::move(p);
    return r;
}

LineResultant resultant_with_line(const IntPoly &g, int sign)
{
    if (sign != 1 && sign != -1) {
        throw DomainError("line sign must be +1 or -1");
    }
    if (!g.is_monic_in_b()) {
        throw DomainError("resultant with a line needs g monic in b");
    }
    // b := a - sign*i
    const UniPoly<GaussInt> s({GaussInt(0L, static_cast<long>(-sign)), GaussInt(1L)}, Var::A);
    return unit_normalized(substitute_b(g, s));
}

UniPoly<Int> resultant_h12(const IntPoly &g)
{
    if (!g.is_monic_in_b()) {
        throw DomainError("resultant_h12 needs g monic in b");
    }
    const auto minus = resultant_with_line(g, 1).raw;
    const auto plus = resultant_with_line(g, -1).raw;
    const auto prod = minus * plus;
    std::vector<Int> out;
    out.reserve(prod.coeffs().size());
    for (const GaussInt &c : prod.coeffs()) {
        if (c.im() != 0) {
            throw Error("product over a conjugate pair is not real");
        }
        out.push_back(c.re());
    }
    return UniPoly<Int>(std::move(out), Var::A);
}

SmoothPointWitness smooth_point_check(const IntPoly &g, const GaussRat &a0, const GaussRat &b0)
{
    SmoothPointWitness w;
    w.a0 = a0;
    w.b0 = b0;
    w.value = eval_point(g, a0, b0);
    w.grad_a = eval_point(partial_derivative(g, Var::A), a0, b0);
    w.grad_b = eval_point(partial_derivative(g, Var::B), a0, b0);
    const GaussRat zero;
    w.smooth = w.value == zero && !(w.grad_a == zero && w.grad_b == zero);
    return w;
}

bool thurston_coprime(unsigned k1, unsigned n1, unsigned k2, unsigned n2, OrbitCache &cache)
{
    const IntPoly p = orbit_difference(Start::PlusA, k1, n1, cache);
    const IntPoly q = orbit_difference(Start::MinusA, k2, n2, cache);
    return primitive_gcd(p, q).is_constant();
}

} // namespace preper
