#ifndef PREPER_F3_UNIVARIATE_HPP
#define PREPER_F3_UNIVARIATE_HPP

#include "preper/bipoly.hpp"

namespace preper {

// Rabin's test over F3. Polynomials with x^(3^d) = x mod p for some d below
// the degree are rejected as soon as that d is reached, so sparse
// polynomials of huge degree that split this way stay cheap.
bool f3_univariate_irreducible(const UniPoly<F3> &p);

// u(b - a) expanded in F3[a, b], using Lucas' theorem for the binomials.
F3Poly compose_line(const UniPoly<F3> &u);

} // namespace preper

#endif // PREPER_F3_UNIVARIATE_HPP
