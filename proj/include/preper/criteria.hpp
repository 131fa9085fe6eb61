#ifndef PREPER_CRITERIA_HPP
#define PREPER_CRITERIA_HPP

#include <string>

#include "preper/dynamics.hpp"
#include "preper/resultant.hpp"

namespace preper {

struct PowerCondition {
    bool holds = false;
    unsigned exponent = 0;
};

struct IrreducibleBaseCondition {
    bool holds = false;
    std::string witness; // base mod 3 as a polynomial in t = b - a
};

struct ResultantCondition {
    bool holds = false;
    UniPoly<Int> resultant{Var::A};
    Int modulus;
};

// Three-condition 3-Eisenstein test of g against the base h. When verdict
// holds, g is irreducible over Q.
struct EisensteinCertificate {
    std::string g_id;
    std::string h_id;
    PowerCondition cond1;
    IrreducibleBaseCondition cond2;
    ResultantCondition cond3;
    bool verdict = false;
};

EisensteinCertificate eisenstein_check(const IntPoly &g, const IntPoly &h,
                                       std::string g_id = "g", std::string h_id = "h");

// p(a, b) = u(b - a) for some u over F3, or nullopt.
std::optional<UniPoly<F3>> as_line_polynomial(const F3Poly &p);

// Irreducibility of p in F3[a, b]; p must be a polynomial in b - a alone,
// anything else throws UnsupportedShape.
bool f3_irreducible(const F3Poly &p);

struct LineResultant {
    UniPoly<GaussInt> raw{Var::A};
    GaussInt unit;
    UniPoly<GaussInt> normalized{Var::A};
};

// Unit of the leading coefficient and the polynomial divided by it.
LineResultant unit_normalized(UniPoly<GaussInt> p);

// g(a, a - sign*i), i.e. Res(g, b - a + sign*i) for monic g.
LineResultant resultant_with_line(const IntPoly &g, int sign);

// Res(g, (b-a)^2+1) as g(a, a-i) g(a, a+i); the product must be real.
UniPoly<Int> resultant_h12(const IntPoly &g);

struct SmoothPointWitness {
    GaussRat a0;
    GaussRat b0;
    GaussRat value;
    GaussRat grad_a;
    GaussRat grad_b;
    bool smooth = false;
};

SmoothPointWitness smooth_point_check(const IntPoly &g, const GaussRat &a0, const GaussRat &b0);

// Constant gcd of f^(k1+n1)(a) - f^k1(a) and f^(k2+n2)(-a) - f^k2(-a).
bool thurston_coprime(unsigned k1, unsigned n1, unsigned k2, unsigned n2, OrbitCache &cache);

} // namespace preper

#endif // PREPER_CRITERIA_HPP
