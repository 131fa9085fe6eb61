#ifndef PREPER_UNICRITICAL_HPP
#define PREPER_UNICRITICAL_HPP

#include "preper/dynamics.hpp"

namespace preper {

struct UniResultant {
    unsigned k = 0;
    Int univariate;       // Res(h_{k,2}(0,b), b^2+1)
    Int bivariate_at_zero; // Res(h_{k,2}, (b-a)^2+1) at a = 0
};

// Both routes; throws Error when they disagree.
UniResultant uni_resultant_check(unsigned k, const IntPoly &h_k2);
UniResultant uni_resultant_check(unsigned k, OrbitCache &cache);

struct UniEisenstein {
    unsigned k = 0;
    long degree = 0; // of h_{k,2}(0,b)
    unsigned exponent = 0;
    bool cond1 = false; // h_{k,2}(0,b) = (b^2+1)^N mod 3
    bool cond2 = false; // b^2+1 irreducible mod 3
    bool cond3 = false; // resultant not divisible by 81
    Int resultant;
    bool verdict = false;
};

// Even k only.
UniEisenstein uni_eisenstein(unsigned k, const IntPoly &h_k2);
UniEisenstein uni_eisenstein(unsigned k, OrbitCache &cache);

// For odd k there is no verdict; only these are reported.
struct UniOddRecord {
    unsigned k = 0;
    long degree = 0;
    Int resultant;
};

UniOddRecord uni_odd_record(unsigned k, const IntPoly &h_k2);

// f^(1+n)(0) - f(0) is divisible by f^n(0) in Z[b] for f(z) = z^3 + b.
bool unicritical_coalescence(unsigned n);

} // namespace preper

#endif // PREPER_UNICRITICAL_HPP
