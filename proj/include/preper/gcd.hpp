#ifndef PREPER_GCD_HPP
#define PREPER_GCD_HPP

#include <cstdint>
#include <vector>

#include "preper/bipoly.hpp"

namespace preper {

struct GcdWithCofactors {
    IntPoly gcd;
    IntPoly cofactor_p; // p / gcd
    IntPoly cofactor_q; // q / gcd
};

// Primitive gcd over Z[a,b]: unit integer content, positive leading
// coefficient in canonical order. gcd(p, 0) is the normalised primitive part
// of p. Throws DomainError when both inputs are zero.
IntPoly primitive_gcd(const IntPoly &p, const IntPoly &q);

// Same gcd plus the exact cofactors, which the algorithm obtains from its
// final trial divisions anyway.
GcdWithCofactors gcd_with_cofactors(const IntPoly &p, const IntPoly &q);

struct Saturation {
    IntPoly result;  // p with every factor shared with q removed
    IntPoly removed; // result * removed == p
};

// Removes from p every irreducible factor it shares with q, to full
// multiplicity. Both inputs must be nonzero.
Saturation saturate_detailed(const IntPoly &p, const IntPoly &q);

inline IntPoly saturate(const IntPoly &p, const IntPoly &q)
{
    return saturate_detailed(p, q).result;
}

// Content of a primitive p viewed as a polynomial in b over Z[a]; the
// result involves a alone and is sign-normalised.
IntPoly content_in_b(const IntPoly &p);

namespace detail {

// Word-size primes below 2^62 in decreasing order, generated on demand.
std::uint64_t modular_prime(std::size_t index);

} // namespace detail

} // namespace preper

#endif // PREPER_GCD_HPP
